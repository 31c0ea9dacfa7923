#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lazyhom/builders.hpp"
#include "lazyhom/convolution.hpp"
#include "lazyhom/pointed.hpp"

#include <random>

using namespace lazyhom;

namespace {

std::vector<FinDimHopf> corpus() {
  std::vector<FinDimHopf> out{sweedler_h4()};
  for (const auto& name : builtin_group_names()) {
    const FiniteGroup g = group_by_name(name);
    out.push_back(group_algebra(g));
    out.push_back(function_algebra(g));
  }
  return out;
}

FinDimHopf with_entry_bumped(const FinDimHopf& h, std::mt19937& rng) {
  const std::size_t n = h.dim();
  Tensor3 mult = h.mult(), comult = h.comult();
  QVector unit = h.unit(), counit = h.counit();
  QMatrix s = h.antipode();
  const std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
  switch (rng() % 5) {
    case 0: mult(i, j, k) += 1; break;
    case 1: comult(i, j, k) += 1; break;
    case 2: unit[i] += 1; break;
    case 3: counit[i] += 1; break;
    default: s(i, j) += 1; break;
  }
  return FinDimHopf(h.name(), h.labels(), mult, unit, comult, counit, s);
}

LinearFunctional functional(std::initializer_list<long> xs) {
  LinearFunctional f;
  for (long x : xs) f.coeffs.push_back(x);
  return f;
}

}  // namespace

TEST_CASE("axioms hold on the builtin corpus, duals and tensor squares") {
  for (const auto& h : corpus()) {
    CAPTURE(h.name());
    CHECK(verify_hopf(h).all_passed());
    CHECK(verify_hopf(dual(h)).all_passed());
  }
  CHECK(verify_hopf(tensor_square(sweedler_h4())).all_passed());
  CHECK(verify_hopf(tensor_square(group_algebra(group_by_name("S3")))).all_passed());
}

TEST_CASE("single-entry perturbations break some axiom") {
  std::mt19937 rng(2024);
  const auto hs = corpus();
  for (int trial = 0; trial < 60; ++trial) {
    const FinDimHopf& h = hs[rng() % hs.size()];
    const HopfReport r = verify_hopf(with_entry_bumped(h, rng));
    CHECK_FALSE(r.all_passed());
    REQUIRE(r.first_failure() != nullptr);
    CHECK_FALSE(r.first_failure()->witness.empty());
  }
}

TEST_CASE("Sweedler algebra structure") {
  const FinDimHopf h = sweedler_h4();
  CHECK_FALSE(h.is_commutative());
  CHECK_FALSE(h.is_cocommutative());
  // S has order 4: S^2(x) = -x
  const QMatrix s2 = h.antipode() * h.antipode();
  CHECK(s2 * unit_vector(4, 2) == QVector{0, 0, -1, 0});
  CHECK(s2 * s2 == QMatrix::identity(4));
}

TEST_CASE("convolution on a group algebra is pointwise") {
  const FinDimHopf h = group_algebra(group_by_name("C3"));
  const LinearFunctional f = functional({1, 2, -3}), g = functional({5, 1, 2});
  CHECK(convolve(h, f, g) == functional({5, 2, -6}));
  CHECK(convolve(h, counit_functional(h), f) == f);
  LinearFunctional expect;
  for (const auto& c : f.coeffs) expect.coeffs.push_back(1 / Rational(c));
  CHECK(conv_inverse(h, f) == expect);
  CHECK_THROWS_AS(conv_inverse(h, functional({1, 0, 1})), NotInvertible);
}

TEST_CASE("laziness on the Sweedler algebra") {
  const FinDimHopf h = sweedler_h4();
  CHECK(is_lazy(h, counit_functional(h)));
  CHECK(is_lazy(h, functional({3, 3, 0, 0})));
  CHECK_FALSE(is_lazy(h, functional({1, 2, 0, 0})));
  CHECK_FALSE(is_lazy(h, functional({1, 1, 1, 0})));
  const LinearFunctional eps2 = counit_functional(tensor_square(h));
  CHECK(is_lazy2(h, eps2));
  CHECK(is_left_2cocycle(h, eps2));
}

TEST_CASE("coboundaries on group algebras") {
  const FiniteGroup g = group_by_name("S3");
  const FinDimHopf h = group_algebra(g);
  const std::size_t n = g.order();
  LinearFunctional mu;
  for (std::size_t a = 0; a < n; ++a) mu.coeffs.push_back(a == g.identity() ? Rational(1) : Rational(a + 2));
  const LinearFunctional d = coboundary(h, mu);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) CHECK(d(a * n + b) == mu(a) * mu(b) / mu(g.mul(a, b)));
  CHECK(is_left_2cocycle(h, d));
  CHECK(is_lazy2(h, d));
  CHECK(coboundary(h, counit_functional(h)) == counit_functional(tensor_square(h)));

  LinearFunctional bad = mu;
  bad.coeffs[g.identity()] = 2;
  CHECK_THROWS_AS(coboundary(h, bad), NotInvertible);
  LinearFunctional skew = counit_functional(tensor_square(h));
  skew.coeffs[1 * n + 2] = 5;
  CHECK_FALSE(is_left_2cocycle(h, skew));
}

TEST_CASE("pointed profiles") {
  const FinDimHopf kg = group_algebra(group_by_name("C3"));
  std::vector<QVector> cands;
  for (std::size_t i = 0; i < 3; ++i) cands.push_back(unit_vector(3, i));
  const PointedCoalgebra p = pointed_profile(kg, cands);
  CHECK(p.grouplikes.size() == 3);
  CHECK(p.skew_primitives.empty());
  CHECK(p.coordinates == QMatrix::identity(3));

  // 1 and g are grouplike; x is (1,g)-skew, which the construction does not cover
  const FinDimHopf h = sweedler_h4();
  std::vector<QVector> basis;
  for (std::size_t i = 0; i < 4; ++i) basis.push_back(unit_vector(4, i));
  CHECK_THROWS_AS(pointed_profile(h, basis), UnsupportedShape);
}
