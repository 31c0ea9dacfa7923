#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lazyhom/builders.hpp"
#include "lazyhom/lazy_quotients.hpp"
#include "lazyhom/linalg.hpp"
#include "lazyhom/oracles.hpp"

#include <functional>

using namespace lazyhom;

namespace {

// Linear map k[G] -> k[K] induced by a group homomorphism given on elements.
QMatrix induced_map(std::size_t source_order, std::size_t target_order, const std::function<std::size_t(std::size_t)>& f) {
  QMatrix m(target_order, source_order);
  for (std::size_t a = 0; a < source_order; ++a) m(f(a), a) = 1;
  return m;
}

std::size_t element_order(const FiniteGroup& g, std::size_t a) {
  std::size_t k = 1;
  for (std::size_t p = a; p != g.identity(); p = g.mul(p, a)) ++k;
  return k;
}

// f : H -> K descends to H1(H) -> H1(K) when P_K f vanishes on ker P_H.
bool descends(const QMatrix& f, const QuotientHopf& source, const QuotientHopf& target) {
  for (const auto& v : kernel_basis(source.projection))
    if (!is_zero_vector(target.projection * (f * v))) return false;
  return true;
}

}  // namespace

TEST_CASE("Sweedler lazy quotients have dimensions 1 and 5") {
  const FinDimHopf h = sweedler_h4();
  Checks checks;
  const QuotientCoalgebra c1 = lazy_quotient_c1(h.coalgebra(), checks);
  CHECK(c1.quotient.dim() == 1);
  // 1 and g have the same class, x and y vanish
  CHECK(c1.projection.col(0) == c1.projection.col(1));
  CHECK(is_zero_vector(c1.projection.col(2)));
  CHECK(is_zero_vector(c1.projection.col(3)));

  const QuotientCoalgebra q2 = lazy_quotient_h2(h, checks);
  REQUIRE(q2.quotient.dim() == 5);
  const auto col = [&](std::size_t a, std::size_t b) { return q2.projection.col(a * 4 + b); };
  CHECK(col(1, 0) == col(0, 0));
  CHECK(col(0, 1) == col(0, 0));
  CHECK(col(1, 1) == col(0, 0));
  for (std::size_t a : {0, 1})
    for (std::size_t b : {2, 3}) {
      CHECK(is_zero_vector(col(a, b)));
      CHECK(is_zero_vector(col(b, a)));
    }
  // h0 grouplike, h_i (h0,h0)-skew-primitive
  const FinDimCoalgebra& c = q2.quotient;
  const QVector h0 = col(0, 0);
  auto outer = [](const QVector& a, const QVector& b) {
    QVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
  };
  CHECK(c.coproduct(h0) == outer(h0, h0));
  for (std::size_t a : {2, 3})
    for (std::size_t b : {2, 3}) {
      const QVector hi = col(a, b);
      QVector expect = outer(h0, hi);
      const QVector right = outer(hi, h0);
      for (std::size_t k = 0; k < expect.size(); ++k) expect[k] += right[k];
      CHECK(c.coproduct(hi) == expect);
    }
  CHECK(strong_cocommutativity_holds(h.coalgebra(), c1.projection));
  CHECK(lazy_cocommutativity_holds(h, q2.projection));
}

TEST_CASE("group algebras are their own lazy quotients") {
  for (const auto& name : {"C3", "S3", "D4"}) {
    const FiniteGroup g = group_by_name(name);
    const FinDimHopf h = group_algebra(g);
    Checks checks;
    CHECK(lazy_quotient_c1(h.coalgebra(), checks).quotient.dim() == g.order());
    CHECK(lazy_quotient_h2(h, checks).quotient.dim() == g.order() * g.order());
    CHECK(hopf_quotient_h1angle(h, checks).quotient.dim() == g.order());
  }
}

TEST_CASE("H1 of a group algebra is the group algebra of the abelianization") {
  for (const auto& name : {"S3", "D4", "Q8", "C6", "C2xC2"}) {
    const FiniteGroup g = group_by_name(name);
    Checks checks;
    const QuotientHopf q = h1_lazy(group_algebra(g), checks);
    const FPAbelianGroup ab = group_abelianization(g);
    CHECK(q.quotient.dim() == ab.order()->get_ui());
    const auto gl = grouplike_group(q, g.labels());
    REQUIRE(gl.has_value());
    CHECK(gl->is_abelian());
    CHECK(same_invariants(group_abelianization(*gl), ab));
  }
}

TEST_CASE("H1 of a function algebra is functions on the center") {
  for (const auto& name : {"S3", "D4", "Q8", "C4"}) {
    const FiniteGroup g = group_by_name(name);
    Checks checks;
    const QuotientHopf q = h1_lazy(function_algebra(g), checks);
    const FiniteGroup z = group_center(g);
    CHECK(q.quotient.dim() == z.order());
    std::vector<QVector> idempotents;
    for (std::size_t a = 0; a < g.order(); ++a) {
      const QVector e = q.projection.col(a);
      if (!is_zero_vector(e)) idempotents.push_back(e);
    }
    REQUIRE(idempotents.size() == z.order());
    for (std::size_t i = 0; i < idempotents.size(); ++i)
      for (std::size_t j = 0; j < idempotents.size(); ++j) {
        const QVector p = q.quotient.multiply(idempotents[i], idempotents[j]);
        if (i == j) CHECK(p == idempotents[i]);
        else CHECK(is_zero_vector(p));
      }
  }
}

TEST_CASE("ideal closure is a two-sided ideal") {
  const FinDimHopf h = group_algebra(group_by_name("S3"));
  const QVector gen = [&] {
    QVector v(6);
    v[1] = 1;
    v[2] = -1;
    return v;
  }();
  const auto ideal = ideal_closure(h, std::vector<QVector>{gen});
  const Subspace span(6, ideal);
  for (const auto& v : ideal)
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(span.contains(h.multiply(v, unit_vector(6, i))));
      CHECK(span.contains(h.multiply(unit_vector(6, i), v)));
    }
}

TEST_CASE("H1 is functorial along group homomorphisms") {
  Checks checks;
  const FiniteGroup c4 = group_by_name("C4"), c2 = group_by_name("C2"), s3 = group_by_name("S3");
  // cyclic labels are powers of the generator, in order
  const QMatrix reduce = induced_map(4, 2, [](std::size_t a) { return a % 2; });
  CHECK(descends(reduce, h1_lazy(group_algebra(c4), checks), h1_lazy(group_algebra(c2), checks)));

  const QMatrix sign = induced_map(6, 2, [&](std::size_t a) { return element_order(s3, a) == 2 ? std::size_t{1} : 0; });
  CHECK(descends(sign, h1_lazy(group_algebra(s3), checks), h1_lazy(group_algebra(c2), checks)));

  // the inclusion C2 -> H4 lands in the trivial quotient
  const QMatrix incl = induced_map(2, 4, [](std::size_t a) { return a; });
  const QuotientHopf h4 = h1_lazy(sweedler_h4(), checks);
  CHECK(h4.quotient.dim() == 1);
  CHECK(descends(incl, h1_lazy(group_algebra(c2), checks), h4));
}

TEST_CASE("quotient by a non-coideal is rejected") {
  const FinDimHopf h = sweedler_h4();
  Checks checks;
  const std::vector<QVector> rel{unit_vector(4, 1)};  // span(g) is not a coideal
  CHECK_THROWS_AS(quotient_coalgebra(h.coalgebra(), rel, checks), MathError);
}
