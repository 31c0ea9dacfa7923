#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lazyhom/builders.hpp"
#include "lazyhom/lazy_h2.hpp"
#include "lazyhom/oracles.hpp"

#include <tuple>

using namespace lazyhom;

namespace {

enum : std::size_t { kOne = 0, kG = 1, kX = 2, kY = 3 };

struct SweedlerFixture {
  FinDimHopf h = sweedler_h4();
  Checks checks;
  LazyContext ctx = build_lazy_context(h, checks);

  Element d3(std::size_t x, std::size_t y, std::size_t z) const { return d3_element(ctx, x, y, z); }
  // t^-1(1⊗1) t(a⊗b)
  Element a(std::size_t x, std::size_t y) const { return ctx.t2_inv[kOne * 4 + kOne] * ctx.t2[x * 4 + y]; }
};

}  // namespace

TEST_CASE("Sweedler d2 sends T to t(1) and kills the Y generators") {
  SweedlerFixture s;
  const PresentedMorphism d2 = d2_morphism(s.ctx, s.checks);
  REQUIRE(d2.laurent_images().size() == 1);
  CHECK(d2.laurent_images()[0] == s.ctx.t1[kOne]);
  CHECK(d2.poly_images().size() == 4);
  for (const auto& img : d2.poly_images()) CHECK(img.is_zero());
  CHECK(d2_on_pair(s.ctx, kG, kG) == s.ctx.t1[kOne]);
  CHECK(d2_on_pair(s.ctx, kX, kX).is_zero());
}

TEST_CASE("Sweedler d3 table") {
  SweedlerFixture s;
  const FinDimHopf& h = s.h;
  const PresentedCommHopf& f2 = s.ctx.f2.algebra;
  const Element one = f2.one(), zero;
  const Element a1 = s.a(kX, kX), a2 = s.a(kX, kY), a3 = s.a(kY, kX), a4 = s.a(kY, kY);
  for (const Element* ai : {&a1, &a2, &a3, &a4}) {
    CHECK(f2.counit(*ai) == 0);
    CHECK(f2.antipode(*ai) == Rational(-1) * *ai);
  }

  const auto eps = [&](std::size_t x, std::size_t y) { return h.counit_of(h.basis_product(x, y)); };
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q) {
      CAPTURE(h.labels()[p]);
      CAPTURE(h.labels()[q]);
      CHECK(s.d3(p, q, kOne) == eps(p, q) * one);
      CHECK(s.d3(p, kOne, q) == eps(p, q) * one);
      CHECK(s.d3(kOne, p, q) == eps(p, q) * one);
    }
  for (std::size_t p = 0; p < 4; ++p) {
    const Rational e = h.counit()[p];
    CHECK(s.d3(p, kG, kG) == e * one);
    CHECK(s.d3(kG, p, kG) == e * one);
    CHECK(s.d3(kG, kG, p) == e * one);
  }

  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  const std::vector<std::pair<Triple, Element>> expected{
      {{kX, kX, kG}, a2 - a1},      {{kX, kY, kG}, a1 - a2},      {{kY, kX, kG}, a4 - a3},
      {{kY, kY, kG}, a3 - a4},      {{kY, kG, kX}, zero - a1 - a4}, {{kX, kG, kY}, zero - a1 - a4},
      {{kX, kG, kX}, zero - a2 - a3}, {{kY, kG, kY}, zero - a2 - a3}, {{kG, kX, kX}, a1 + a3},
      {{kG, kY, kX}, a1 + a3},      {{kG, kX, kY}, a2 + a4},      {{kG, kY, kY}, a2 + a4},
      {{kX, kX, kX}, zero},         {{kX, kY, kX}, zero},         {{kY, kX, kX}, zero},
      {{kY, kY, kX}, zero},         {{kX, kX, kY}, zero},         {{kY, kX, kY}, zero},
      {{kX, kY, kY}, zero},         {{kY, kY, kY}, zero}};
  for (const auto& [t, value] : expected) {
    const auto [x, y, z] = t;
    CAPTURE(h.labels()[x] + h.labels()[y] + h.labels()[z]);
    CHECK(s.d3(x, y, z) == value);
  }
}

TEST_CASE("Sweedler homology: H1 = k and H2 = k[X]") {
  const FinDimHopf h = sweedler_h4();
  Checks checks;
  const LazyH2Result r = h2_lazy(h, checks);
  CHECK(r.h2.group_part.is_trivial());
  CHECK(r.h2.free_primitives() == 1);
  CHECK(r.h2.to_string() == "k[X]");
  CHECK(r.kernel.algebra.num_laurent() == 0);
  CHECK(r.kernel.algebra.num_poly() == 4);
  CHECK(r.d3_table.size() == 64);

  const H1Routes routes = compare_h1_routes(h, checks);
  CHECK(routes.quotient.quotient.dim() == 1);
  REQUIRE(routes.homology.has_value());
  CHECK(routes.homology->is_trivial());
  CHECK(routes.agree);
}

TEST_CASE("parallel d3 table equals the serial one") {
  for (const auto& spec : {"sweedler", "group:S3", "group:C2xC2"}) {
    CAPTURE(spec);
    Checks checks;
    const LazyContext ctx = build_lazy_context(builtin_hopf(spec), checks);
    CHECK(d3_table_parallel(ctx) == d3_table_serial(ctx));
  }
}

TEST_CASE("H2 of group algebras matches the bar complex") {
  for (const auto& name : {"C2", "C3", "C4", "C2xC2", "S3"}) {
    CAPTURE(name);
    const FiniteGroup g = group_by_name(name);
    Checks checks;
    const LazyH2Result r = h2_lazy(group_algebra(g), checks, false);
    CHECK(same_invariants(r.h2.group_part, bar_homology(g, 2)));
    CHECK(r.h2.free_primitives() == 0);
  }
}

TEST_CASE("invariant transcript is recorded") {
  Checks checks;
  h2_lazy(group_algebra(group_by_name("C3")), checks);
  bool saw_complex = false, saw_membership = false;
  for (const auto& rec : checks.records()) {
    CHECK(rec.passed);
    saw_complex = saw_complex || rec.name.find("d2(d3(x,y,z))") != std::string::npos;
    saw_membership = saw_membership || rec.name.find("HKer(d2)") != std::string::npos;
  }
  CHECK(saw_complex);
  CHECK(saw_membership);
}

TEST_CASE("function algebras are outside the homology route") {
  Checks checks;
  try {
    h2_lazy(function_algebra(group_by_name("S3")), checks);
    FAIL("expected an out-of-scope error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfScope);
  }
  const H1Routes routes = compare_h1_routes(function_algebra(group_by_name("S3")), checks);
  CHECK_FALSE(routes.homology.has_value());
  CHECK_FALSE(routes.homology_error.empty());
  CHECK(routes.quotient.quotient.dim() == 1);
}
