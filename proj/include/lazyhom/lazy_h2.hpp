#pragma once

#include "lazyhom/lazy_quotients.hpp"
#include "lazyhom/presented.hpp"

#include <optional>

namespace lazyhom {

/// Everything the d2/d3 evaluators read. Immutable once built, so d3 can be
/// evaluated concurrently.
struct LazyContext {
  FinDimHopf h;
  QuotientCoalgebra c1, h2;
  FreeCommHopf f1, f2;        // F(H^[1]) and F(H^[2])
  std::vector<Element> t1, t1_inv;  // t(x̲), t^-1(x̲) for basis x of H
  std::vector<Element> t2, t2_inv;  // t(x̃⊗y), t^-1(x̃⊗y) at index x * dim + y

  std::size_t dim() const noexcept { return h.dim(); }
};

/// Builds both lazy quotients, their pointed profiles (candidates are the
/// images of basis elements) and the free commutative Hopf algebras on them.
LazyContext build_lazy_context(const FinDimHopf& h, Checks& checks);

/// d2(t(x̃⊗y)) = t(x̲1) t(y̲1) t^-1((x2 y2)̲) on the generators of F(H^[2]).
/// Checks independence of the representative, the Hopf-morphism identities,
/// ε∘d2 = ε and d2(a1) ⊗ a2 = d2(a2) ⊗ a1 on generators.
PresentedMorphism d2_morphism(const LazyContext& ctx, Checks& checks);

/// d2 evaluated on the basis tensor x ⊗ y of H ⊗ H (before passing to H^[2]).
Element d2_on_pair(const LazyContext& ctx, std::size_t x, std::size_t y);

/// t(ỹ1⊗z1) t(x̃1⊗y2z2) t^-1(x̃2y3⊗z3) t^-1(x̃3⊗y4) in F(H^[2]).
Element d3_element(const LazyContext& ctx, std::size_t x, std::size_t y, std::size_t z);

/// d3 over the whole basis cube, entry x * dim^2 + y * dim + z.
std::vector<Element> d3_table_serial(const LazyContext& ctx);
std::vector<Element> d3_table_parallel(const LazyContext& ctx);

struct D3Entry {
  std::size_t x, y, z;
  Element value;   // in F(H^[2])
  Element kernel;  // the same element in HKer(d2) coordinates
};

struct LazyH2Result {
  LazyContext context;
  PresentedMorphism d2;
  HopfKernel kernel;
  std::vector<D3Entry> d3_table;
  std::vector<Element> relations;  // generators of B2 in kernel coordinates
  HomologyDescriptor h2;
};

/// H2 = HKer(d2) / B2 with B2 generated by d3 - ε(xyz) and S(d3) - ε(xyz).
LazyH2Result h2_lazy(const FinDimHopf& h, Checks& checks, bool parallel = true);

/// F(H^[1]) modulo d2(a) - ε(a) over the generators a of F(H^[2]).
HomologyDescriptor h1_via_homology(const LazyContext& ctx, const PresentedMorphism& d2);
HomologyDescriptor h1_via_homology(const FinDimHopf& h, Checks& checks);

struct H1Routes {
  QuotientHopf quotient;                   // abelianization of H^<1>
  std::optional<FiniteGroup> grouplikes;   // when the quotient is a group algebra
  std::optional<HomologyDescriptor> homology;
  std::string homology_error;              // set when the homology route is out of scope
  bool agree = false;
};

/// Runs both routes; they agree when the quotient is the group algebra of
/// the finite group the homology route describes.
H1Routes compare_h1_routes(const FinDimHopf& h, Checks& checks);

}  // namespace lazyhom
