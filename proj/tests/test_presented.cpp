#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lazyhom/builders.hpp"
#include "lazyhom/lazy_quotients.hpp"
#include "lazyhom/presented.hpp"

#include <random>

using namespace lazyhom;

namespace {

// k[T1^±, T2^±, Y] with Y (T1, T1)-skew-primitive
PresentedCommHopf sample_algebra() { return PresentedCommHopf({"T1", "T2"}, {"Y"}, {{1, 0}}); }

Element random_element(const PresentedCommHopf& p, std::mt19937& rng) {
  Element out;
  for (int t = 0; t < 3; ++t) {
    Element m = Rational(static_cast<long>(rng() % 7) - 3) * p.one();
    for (std::size_t i = 0; i < p.num_laurent(); ++i) m = m * p.laurent(i, static_cast<std::int64_t>(rng() % 5) - 2);
    for (std::size_t j = 0; j < p.num_poly(); ++j)
      for (unsigned d = rng() % 3; d > 0; --d) m = m * p.poly(j);
    out = out + m;
  }
  return out;
}

TensorElement coproduct_of_product(const PresentedCommHopf& p, const Element& a, const Element& b) {
  return p.coproduct(a) * p.coproduct(b);
}

}  // namespace

TEST_CASE("Laurent and polynomial arithmetic") {
  const PresentedCommHopf p = sample_algebra();
  CHECK(p.laurent(0) * p.laurent(0, -1) == p.one());
  CHECK((p.poly(0) - p.poly(0)).is_zero());
  CHECK(p.counit(p.laurent(1, 3)) == 1);
  CHECK(p.counit(p.poly(0)) == 0);
  TensorElement expect = tensor(p.laurent(0), p.poly(0));
  for (const auto& [pair, c] : tensor(p.poly(0), p.laurent(0)).terms) expect.add(pair.first, pair.second, c);
  CHECK(p.coproduct(p.poly(0)) == expect);
  CHECK(p.antipode(p.poly(0)) == Rational(-1) * (p.laurent(0, -2) * p.poly(0)));
}

TEST_CASE("coproduct is multiplicative and the antipode axiom holds") {
  const PresentedCommHopf p = sample_algebra();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Element a = random_element(p, rng), b = random_element(p, rng);
    CHECK(p.coproduct(a * b) == coproduct_of_product(p, a, b));
    CHECK(p.counit(a * b) == p.counit(a) * p.counit(b));
    CHECK(p.antipode(a * b) == p.antipode(a) * p.antipode(b));
    CHECK(antipode_axiom_holds(p, a));
  }
}

TEST_CASE("free commutative Hopf algebra on a group coalgebra") {
  const FinDimHopf kg = group_algebra(group_by_name("C3"));
  std::vector<QVector> cands;
  for (std::size_t i = 0; i < 3; ++i) cands.push_back(unit_vector(3, i));
  Checks checks;
  const FreeCommHopf f = free_commutative_hopf(pointed_profile(kg, cands), checks);
  CHECK(f.algebra.num_laurent() == 3);
  CHECK(f.algebra.num_poly() == 0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(f.t_basis[i] * f.t_inv_basis[i] == f.algebra.one());
  CHECK_FALSE(checks.records().empty());
}

TEST_CASE("free commutative Hopf algebra on the Sweedler H^[2]") {
  const FinDimHopf h = sweedler_h4();
  Checks checks;
  const QuotientCoalgebra q2 = lazy_quotient_h2(h, checks);
  const FreeCommHopf f = free_commutative_hopf(pointed_profile(q2.quotient, columns_of(q2.projection)), checks);
  CHECK(f.algebra.num_laurent() == 1);
  CHECK(f.algebra.num_poly() == 4);
  // t * t^-1 = ε on an arbitrary combination of the quotient basis
  QVector v(q2.quotient.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(static_cast<long>(i) + 1);
  const Element t = f.t(v);
  CHECK(f.algebra.counit(t) == q2.quotient.counit_of(v));
  CHECK(antipode_axiom_holds(f.algebra, t));
}

TEST_CASE("morphisms and Hopf kernels of lattice maps") {
  const PresentedCommHopf src({"T1", "T2"}, {"Y"}, {{1, 0}});
  const PresentedCommHopf tgt({"T"}, {}, {});
  // T1 -> T, T2 -> T, Y -> 0
  const PresentedMorphism f(src, tgt, {tgt.laurent(0), tgt.laurent(0)}, {Element{}});
  CHECK(f.is_hopf_morphism());
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Element a = random_element(src, rng), b = random_element(src, rng);
    CHECK(f.apply(a * b) == f.apply(a) * f.apply(b));
  }
  Checks checks;
  const HopfKernel k = hopf_kernel(f, checks);
  CHECK(k.algebra.num_laurent() == 1);
  CHECK(k.algebra.num_poly() == 1);
  const Element ratio = src.laurent(0) * src.laurent(1, -1);
  CHECK(in_hopf_kernel(f, ratio));
  CHECK_FALSE(in_hopf_kernel(f, src.laurent(0)));
  const auto r = k.rewrite(ratio * ratio);
  REQUIRE(r.has_value());
  CHECK(k.include(*r) == ratio * ratio);
  CHECK_FALSE(k.rewrite(src.laurent(0)).has_value());
  const Element x = src.laurent(0, -1) * src.poly(0);
  CHECK(in_hopf_kernel(f, x));
  REQUIRE(k.rewrite(x).has_value());
  CHECK(k.include(*k.rewrite(x)) == x);

  // Laurent images must be invertible monomials
  CHECK_THROWS_AS(PresentedMorphism(src, tgt, {tgt.laurent(0) + tgt.one(), tgt.laurent(0)}, {Element{}}), UnsupportedShape);
  // the kernel construction needs Y -> 0
  const PresentedMorphism keeps_y(src, src, {src.laurent(0), src.laurent(1)}, {src.poly(0)});
  CHECK_THROWS_AS(hopf_kernel(keeps_y, checks), UnsupportedShape);
}

TEST_CASE("quotients by relations and character groups") {
  const PresentedCommHopf p({"T"}, {"Y1", "Y2"}, {{0}, {0}});
  const Element t = p.laurent(0);
  const HomologyDescriptor z2 = quotient_by_relations(p, {t * t - p.one(), p.poly(0) - p.poly(1)});
  CHECK(z2.group_part.to_string() == "Z/2");
  CHECK(z2.free_primitives() == 1);
  CHECK(z2.to_string() == "k[Z/2] ⊗ k[X]");
  const CharacterReport c = character_group_descriptor(z2);
  CHECK(c.sign_factors == 1);
  CHECK(c.free_rank == 0);
  CHECK(c.affine_dim == 1);

  const HomologyDescriptor trivial = quotient_by_relations(p, {t - p.one(), p.poly(0), p.poly(1)});
  CHECK(trivial.is_trivial());
  CHECK(trivial.to_string() == "k");
  CHECK(character_group_descriptor(trivial).to_string() == "{ε}");

  const HomologyDescriptor free = quotient_by_relations(p, {p.poly(0)});
  CHECK(free.group_part.free_rank() == 1);
  CHECK(character_group_descriptor(free).free_rank == 1);

  CHECK_THROWS_AS(quotient_by_relations(p, {t + p.one()}), UnsupportedRelation);
  CHECK_THROWS_AS(quotient_by_relations(p, {p.poly(0) * p.poly(1)}), UnsupportedRelation);
}
