#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lazyhom/abelian.hpp"
#include "lazyhom/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace lazyhom;

namespace {

ZMatrix random_zmatrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  ZMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Leibniz expansion, independent of the elimination code.
Integer leibniz(const ZMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

ZVector zrow(std::initializer_list<long> xs) {
  ZVector v;
  for (long x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-10/5")) == "-2");
  CHECK(format_rational(parse_rational("0/7")) == "0");
  CHECK(parse_rational("1/3") + parse_rational("1/6") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rank, kernel and solve agree on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    ZMatrix z = random_zmatrix(rng, r, c);
    if (trial % 3 == 0 && r > 1)  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) z(r - 1, j) = 2 * z(0, j);
    const QMatrix a = to_rational(z);
    const std::size_t rk = rank(a);
    CHECK(rk == rank(a.transpose()));
    const auto ker = kernel_basis(a);
    CHECK(ker.size() == c - rk);
    for (const auto& v : ker) CHECK(is_zero_vector(a * v));

    QVector x0(c);
    for (auto& q : x0) {
      q = Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
      q.canonicalize();
    }
    const auto x = solve(a, a * x0);
    REQUIRE(x.has_value());
    CHECK(a * *x == a * x0);
  }
}

TEST_CASE("inconsistent systems and singular matrices") {
  const QMatrix a{{1, 2}, {2, 4}};
  CHECK_FALSE(solve(a, QVector{1, 0}).has_value());
  CHECK_FALSE(inverse(a).has_value());
  const QMatrix b{{2, 1}, {1, 1}};
  const auto inv = inverse(b);
  REQUIRE(inv.has_value());
  CHECK(b * *inv == QMatrix::identity(2));
  CHECK(inverse(QMatrix(0, 0)).has_value());
}

TEST_CASE("subspace membership and quotient maps") {
  const std::vector<QVector> gens{{1, 1, 0}, {2, 2, 0}};
  Subspace s(3, gens);
  CHECK(s.dim() == 1);
  CHECK(s.contains(QVector{-3, -3, 0}));
  CHECK_FALSE(s.contains(QVector{1, 0, 0}));
  const QuotientMaps q = quotient_space(3, gens);
  CHECK(q.projection.rows() == 2);
  CHECK(q.projection * q.section == QMatrix::identity(2));
  CHECK(is_zero_vector(q.projection * gens[0]));
}

TEST_CASE("Smith form is a unimodular diagonalization") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const ZMatrix a = random_zmatrix(rng, r, c, -6, 6);
    const Smith s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(leibniz(s.u)) == 1);
    CHECK(abs(leibniz(s.v)) == 1);
    const std::size_t m = std::min(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      CHECK(sgn(s.d(i, i)) >= 0);
      if (s.d(i, i) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
      else CHECK(s.d(i + 1, i + 1) == 0);
    }
    if (r == c) {
      Integer prod = 1;
      for (std::size_t i = 0; i < m; ++i) prod *= s.d(i, i);
      CHECK(prod == abs(leibniz(a)));
    }
  }
}

TEST_CASE("determinant matches the Leibniz expansion") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const ZMatrix a = random_zmatrix(rng, n, n, -9, 9);
    CHECK(determinant(a) == leibniz(a));
  }
}

TEST_CASE("Hermite rows span the same lattice") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const ZMatrix a = random_zmatrix(rng, 1 + rng() % 4, 1 + rng() % 4, -5, 5);
    const ZMatrix h = hermite_rows(a);
    for (std::size_t i = 0; i < a.rows(); ++i) CHECK(lattice_coordinates(h, a.row(i)).has_value());
    CHECK(rank(to_rational(h)) == h.rows());
    CHECK(rank(to_rational(h)) == rank(to_rational(a)));
  }
  const ZMatrix h = hermite_rows(ZMatrix{{2, 0}, {0, 2}});
  CHECK_FALSE(lattice_coordinates(h, zrow({1, 0})).has_value());
  CHECK(lattice_coordinates(h, zrow({4, -2})).has_value());
}

TEST_CASE("integer kernel lattice") {
  const ZMatrix f{{1, 1, 0}, {0, 2, 2}};
  const auto ker = abelian_kernel(f);
  REQUIRE(ker.size() == 1);
  CHECK(f * ker[0] == zrow({0, 0}));
  const ZMatrix basis = ZMatrix::from_rows(ker, 3);
  CHECK(lattice_coordinates(basis, zrow({3, -3, 3})).has_value());
}

TEST_CASE("finitely presented abelian groups") {
  const std::vector<ZVector> rels{zrow({2, 0}), zrow({0, 3})};
  const FPAbelianGroup z6 = fp_abelian_group(2, rels);
  CHECK(z6.to_string() == "Z/6");
  CHECK(*z6.order() == 6);
  CHECK(z6.is_identity(zrow({2, 3})));
  CHECK_FALSE(z6.is_identity(zrow({1, 0})));

  const std::vector<ZVector> klein{zrow({2, 0, 0}), zrow({0, 2, 0})};
  const FPAbelianGroup g = fp_abelian_group(3, klein);
  CHECK(g.free_rank() == 1);
  CHECK_FALSE(g.order().has_value());
  CHECK(same_invariants(g, abelian_group_from_factors({2, 2, 0})));
  CHECK(fp_abelian_group(2, std::vector<ZVector>{zrow({1, 0}), zrow({0, 1})}).is_trivial());
}
