#include "lazyhom/lazy_h2.hpp"

#include "lazyhom/oracles.hpp"

#include <array>

namespace lazyhom {

namespace {

constexpr const char* kModule = "lazy-h2";

TensorElement flip(const TensorElement& t) {
  TensorElement out;
  for (const auto& [pair, c] : t.terms) out.add(pair.second, pair.first, c);
  return out;
}

/// Sparse iterated coproduct: every term of Δ^(parts-1)(e_x).
template <std::size_t Parts>
std::vector<std::pair<std::array<std::size_t, Parts>, Rational>> iterated_coproduct(const FinDimHopf& h, std::size_t x) {
  std::vector<std::pair<std::array<std::size_t, Parts>, Rational>> out;
  if constexpr (Parts == 1) {
    out.push_back({{x}, Rational(1)});
  } else {
    for (const auto& [idx, c] : iterated_coproduct<Parts - 1>(h, x))
      for (const auto& t : h.coproduct_terms(idx[Parts - 2])) {
        std::array<std::size_t, Parts> next{};
        std::copy(idx.begin(), idx.end(), next.begin());
        next[Parts - 2] = t.a;
        next[Parts - 1] = t.b;
        out.push_back({next, c * t.c});
      }
  }
  return out;
}

Element combine(const std::vector<Element>& basis_images, const QVector& coeffs) {
  Element out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!is_zero(coeffs[k])) out = out + coeffs[k] * basis_images[k];
  return out;
}

std::vector<Element> generators(const PresentedCommHopf& p) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < p.num_laurent(); ++i) gens.push_back(p.laurent(i));
  for (std::size_t j = 0; j < p.num_poly(); ++j) gens.push_back(p.poly(j));
  return gens;
}

}  // namespace

LazyContext build_lazy_context(const FinDimHopf& h, Checks& checks) {
  QuotientCoalgebra c1 = lazy_quotient_c1(h.coalgebra(), checks);
  QuotientCoalgebra q2 = lazy_quotient_h2(h, checks);
  PointedCoalgebra p1 = pointed_profile(c1.quotient, columns_of(c1.projection));
  PointedCoalgebra p2 = pointed_profile(q2.quotient, columns_of(q2.projection));
  FreeCommHopf f1 = free_commutative_hopf(p1, checks);
  FreeCommHopf f2 = free_commutative_hopf(p2, checks);

  LazyContext ctx{h, std::move(c1), std::move(q2), std::move(f1), std::move(f2), {}, {}, {}, {}};
  const std::size_t n = h.dim();
  for (std::size_t x = 0; x < n; ++x) {
    const QVector cls = ctx.c1.projection.col(x);
    ctx.t1.push_back(ctx.f1.t(cls));
    ctx.t1_inv.push_back(ctx.f1.t_inv(cls));
  }
  for (std::size_t k = 0; k < n * n; ++k) {
    const QVector cls = ctx.h2.projection.col(k);
    ctx.t2.push_back(ctx.f2.t(cls));
    ctx.t2_inv.push_back(ctx.f2.t_inv(cls));
  }
  return ctx;
}

Element d2_on_pair(const LazyContext& ctx, std::size_t x, std::size_t y) {
  const FinDimHopf& h = ctx.h;
  Element out;
  for (const auto& p : h.coproduct_terms(x))
    for (const auto& q : h.coproduct_terms(y)) {
      const Element lead = (p.c * q.c) * (ctx.t1[p.a] * ctx.t1[q.a]);
      if (lead.is_zero()) continue;
      Element inv;
      for (const auto& m : h.product_terms(p.b, q.b)) inv = inv + m.c * ctx.t1_inv[m.k];
      out = out + lead * inv;
    }
  return out;
}

PresentedMorphism d2_morphism(const LazyContext& ctx, Checks& checks) {
  const std::size_t n = ctx.dim();
  std::vector<Element> on_pairs(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) on_pairs[x * n + y] = d2_on_pair(ctx, x, y);

  if (checks.enabled()) {
    bool independent = true;
    for (const auto& r : ctx.h2.relations) independent = independent && combine(on_pairs, r).is_zero();
    checks.record(kModule, "d2 is independent of the representative", independent,
                  std::to_string(ctx.h2.relations.size()) + " relation vectors of H⊗H");
  }

  // Generator k of F(H^[2]) is t(b_k) for the k-th pointed basis vector b_k.
  const PointedCoalgebra& prof = ctx.f2.profile;
  std::vector<QVector> basis;
  for (const auto& g : prof.grouplikes) basis.push_back(g);
  for (const auto& s : prof.skew_primitives) basis.push_back(s.element);
  std::vector<Element> laurent_images, poly_images;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Element img = combine(on_pairs, ctx.h2.section * basis[k]);
    (k < prof.grouplikes.size() ? laurent_images : poly_images).push_back(img);
  }
  PresentedMorphism d2(ctx.f2.algebra, ctx.f1.algebra, std::move(laurent_images), std::move(poly_images));

  if (checks.enabled()) {
    checks.record(kModule, "d2 is a Hopf morphism on generators", d2.is_hopf_morphism());
    bool lazy = true;
    for (const auto& a : generators(ctx.f2.algebra)) {
      const TensorElement d = ctx.f2.algebra.coproduct(a);
      lazy = lazy && d2.apply_left(d) == flip(d2.apply_right(d));
    }
    checks.record(kModule, "d2(a1)⊗a2 = d2(a2)⊗a1 on generators", lazy);
  }
  return d2;
}

Element d3_element(const LazyContext& ctx, std::size_t x, std::size_t y, std::size_t z) {
  const FinDimHopf& h = ctx.h;
  const std::size_t n = h.dim();
  const auto dx = iterated_coproduct<3>(h, x);
  const auto dy = iterated_coproduct<4>(h, y);
  const auto dz = iterated_coproduct<3>(h, z);
  Element out;
  for (const auto& [xs, cx] : dx)
    for (const auto& [ys, cy] : dy)
      for (const auto& [zs, cz] : dz) {
        const Rational c = cx * cy * cz;
        // t(ỹ1⊗z1) t(x̃1⊗y2z2)
        Element a = ctx.t2[ys[0] * n + zs[0]];
        Element b;
        for (const auto& m : h.product_terms(ys[1], zs[1])) b = b + m.c * ctx.t2[xs[0] * n + m.k];
        // t^-1(x̃2y3⊗z3) t^-1(x̃3⊗y4)
        Element d;
        for (const auto& m : h.product_terms(xs[1], ys[2])) d = d + m.c * ctx.t2_inv[m.k * n + zs[2]];
        const Element& e = ctx.t2_inv[xs[2] * n + ys[3]];
        const Element term = a * b * d * e;
        if (!term.is_zero()) out = out + c * term;
      }
  return out;
}

std::vector<Element> d3_table_serial(const LazyContext& ctx) {
  const std::size_t n = ctx.dim();
  std::vector<Element> out(n * n * n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d3_element(ctx, i / (n * n), (i / n) % n, i % n);
  return out;
}

std::vector<Element> d3_table_parallel(const LazyContext& ctx) {
  const std::size_t n = ctx.dim();
  std::vector<Element> out(n * n * n);
  const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = d3_element(ctx, k / (n * n), (k / n) % n, k % n);
  }
  return out;
}

LazyH2Result h2_lazy(const FinDimHopf& h, Checks& checks, bool parallel) {
  LazyContext ctx = build_lazy_context(h, checks);
  PresentedMorphism d2 = d2_morphism(ctx, checks);
  HopfKernel kernel = hopf_kernel(d2, checks);
  const std::vector<Element> values = parallel ? d3_table_parallel(ctx) : d3_table_serial(ctx);

  const std::size_t n = h.dim();
  const PresentedCommHopf& f2 = ctx.f2.algebra;
  const Element one1 = ctx.f1.algebra.one(), one2 = f2.one();
  std::vector<D3Entry> table;
  std::vector<Element> relations;
  bool complex_identity = true, membership = true;
  std::string witness;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t x = i / (n * n), y = (i / n) % n, z = i % n;
    const Element& v = values[i];
    const Rational eps = h.counit_of(h.multiply(h.basis_product(x, y), unit_vector(n, z)));
    const std::string label = "(" + h.labels()[x] + ", " + h.labels()[y] + ", " + h.labels()[z] + ")";
    if (checks.enabled()) {
      if (d2.apply(v) != eps * one1) {
        complex_identity = false;
        if (witness.empty()) witness = label;
      }
      if (!in_hopf_kernel(d2, v)) {
        membership = false;
        if (witness.empty()) witness = label;
      }
    }
    auto coords = kernel.rewrite(v);
    auto rel = kernel.rewrite(v - eps * one2);
    auto srel = kernel.rewrite(f2.antipode(v) - eps * one2);
    if (!coords || !rel || !srel) throw MathError(kModule, "d3" + label + " = " + f2.to_string(v) + " is not in HKer(d2) coordinates");
    if (!rel->is_zero()) relations.push_back(std::move(*rel));
    if (!srel->is_zero()) relations.push_back(std::move(*srel));
    table.push_back({x, y, z, v, std::move(*coords)});
  }
  if (checks.enabled()) {
    checks.record(kModule, "d2(d3(x,y,z)) = ε(xyz) on " + std::to_string(values.size()) + " triples", complex_identity, witness);
    checks.record(kModule, "d3(x,y,z) lies in HKer(d2) on " + std::to_string(values.size()) + " triples", membership, witness);
  }
  HomologyDescriptor desc = quotient_by_relations(kernel.algebra, relations);
  return LazyH2Result{std::move(ctx), std::move(d2), std::move(kernel), std::move(table), std::move(relations), std::move(desc)};
}

HomologyDescriptor h1_via_homology(const LazyContext& ctx, const PresentedMorphism& d2) {
  std::vector<Element> relations;
  const PresentedCommHopf& f1 = ctx.f1.algebra;
  for (const auto& a : generators(ctx.f2.algebra)) relations.push_back(d2.apply(a) - ctx.f2.algebra.counit(a) * f1.one());
  return quotient_by_relations(f1, relations);
}

HomologyDescriptor h1_via_homology(const FinDimHopf& h, Checks& checks) {
  const LazyContext ctx = build_lazy_context(h, checks);
  return h1_via_homology(ctx, d2_morphism(ctx, checks));
}

H1Routes compare_h1_routes(const FinDimHopf& h, Checks& checks) {
  H1Routes out{h1_lazy(h, checks), std::nullopt, std::nullopt, {}, false};
  out.grouplikes = grouplike_group(out.quotient, h.labels());
  try {
    out.homology = h1_via_homology(h, checks);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfScope) throw;
    out.homology_error = e.what();
  }
  if (out.homology && out.grouplikes && out.homology->free_primitives() == 0) {
    const FPAbelianGroup quotient_group = group_abelianization(*out.grouplikes);
    const auto order = out.homology->group_part.order();
    out.agree = out.grouplikes->is_abelian() && same_invariants(quotient_group, out.homology->group_part) && order &&
                *order == static_cast<unsigned long>(out.quotient.quotient.dim());
  }
  return out;
}

}  // namespace lazyhom
