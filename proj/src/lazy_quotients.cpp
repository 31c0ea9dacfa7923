#include "lazyhom/lazy_quotients.hpp"

#include "lazyhom/builders.hpp"
#include "lazyhom/linalg.hpp"

#include <algorithm>
#include <deque>

namespace lazyhom {

namespace {

constexpr const char* kModule = "lazy-quotients";

/// Images of Δ(source basis) under P ⊗ P, flattened over the quotient.
QVector project_pair(const QMatrix& p, const QVector& pair_vec, std::size_t n) {
  const std::size_t q = p.rows();
  QVector out(q * q);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& c = pair_vec[a * n + b];
      if (is_zero(c)) continue;
      for (std::size_t i = 0; i < q; ++i) {
        if (is_zero(p(i, a))) continue;
        for (std::size_t j = 0; j < q; ++j)
          if (!is_zero(p(j, b))) out[i * q + j] += c * p(i, a) * p(j, b);
      }
    }
  return out;
}

std::vector<std::string> class_labels(const std::vector<std::string>& source, const std::vector<std::size_t>& kept) {
  std::vector<std::string> out;
  for (auto k : kept) out.push_back("[" + source[k] + "]");
  return out;
}

}  // namespace

QuotientCoalgebra quotient_coalgebra(const FinDimCoalgebra& c, std::span<const QVector> relations, Checks& checks) {
  const std::size_t n = c.dim();
  QuotientMaps maps = quotient_space(n, relations);
  const std::size_t q = maps.complement.size();

  Tensor3 comult(q);
  QVector counit(q);
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t src = maps.complement[k];
    const QVector d = project_pair(maps.projection, c.coproduct(unit_vector(n, src)), n);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) comult(k, i, j) = d[i * q + j];
    counit[k] = c.counit()[src];
  }
  FinDimCoalgebra quotient(class_labels(c.labels(), maps.complement), std::move(comult), std::move(counit));

  if (checks.enabled()) {
    bool coideal = true;
    for (const auto& r : maps.relations.basis())
      coideal = coideal && is_zero(c.counit_of(r)) && is_zero_vector(project_pair(maps.projection, c.coproduct(r), n));
    checks.record(kModule, "coideal", coideal, "killed subspace of dimension " + std::to_string(maps.relations.dim()));
    bool morphism = true;
    for (std::size_t x = 0; x < n && morphism; ++x) {
      const QVector px = maps.projection.col(x);
      morphism = project_pair(maps.projection, c.coproduct(unit_vector(n, x)), n) == quotient.coproduct(px) &&
                 quotient.counit_of(px) == c.counit()[x];
    }
    checks.record(kModule, "projection-is-coalgebra-map", morphism);
    checks.record(kModule, "quotient-coalgebra-axioms", verify_coalgebra(quotient).all_passed());
  }
  return QuotientCoalgebra{std::move(quotient), std::move(maps.projection), std::move(maps.section),
                           maps.relations.basis()};
}

std::vector<QVector> ideal_closure(const FinDimHopf& h, std::span<const QVector> gens) {
  const std::size_t n = h.dim();
  Subspace ideal(n);
  std::deque<QVector> work;
  for (const auto& g : gens)
    if (ideal.add(g)) work.push_back(g);
  while (!work.empty()) {
    const QVector v = std::move(work.front());
    work.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      const QVector e = unit_vector(n, i);
      for (QVector w : {h.multiply(e, v), h.multiply(v, e)})
        if (ideal.add(w)) work.push_back(std::move(w));
    }
  }
  return ideal.basis();
}

QuotientHopf quotient_hopf(const FinDimHopf& h, std::span<const QVector> gens, const std::string& name, Checks& checks) {
  const std::size_t n = h.dim();
  const std::vector<QVector> ideal = ideal_closure(h, gens);
  QuotientMaps maps = quotient_space(n, ideal);
  const QMatrix& p = maps.projection;
  const std::size_t q = maps.complement.size();

  Tensor3 mult(q), comult(q);
  QVector counit(q);
  QMatrix anti(q, q);
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t a = maps.complement[k];
    for (std::size_t l = 0; l < q; ++l) {
      const QVector prod = p * h.basis_product(a, maps.complement[l]);
      for (std::size_t m = 0; m < q; ++m) mult(k, l, m) = prod[m];
    }
    const QVector d = project_pair(p, h.coproduct(unit_vector(n, a)), n);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) comult(k, i, j) = d[i * q + j];
    counit[k] = h.counit()[a];
    const QVector s = p * h.antipode().col(a);
    for (std::size_t i = 0; i < q; ++i) anti(i, k) = s[i];
  }
  FinDimHopf quotient(name, class_labels(h.labels(), maps.complement), std::move(mult), p * h.unit(), std::move(comult),
                      std::move(counit), std::move(anti));

  if (checks.enabled()) {
    bool hopf_ideal = true;
    for (const auto& r : ideal)
      hopf_ideal = hopf_ideal && is_zero(h.counit_of(r)) && is_zero_vector(project_pair(p, h.coproduct(r), n)) &&
                   is_zero_vector(p * h.apply_antipode(r));
    checks.record(kModule, name + ": hopf-ideal", hopf_ideal, "ideal of dimension " + std::to_string(ideal.size()));
    bool morphism = true;
    for (std::size_t x = 0; x < n && morphism; ++x) {
      const QVector px = p.col(x);
      morphism = project_pair(p, h.coproduct(unit_vector(n, x)), n) == quotient.coproduct(px) &&
                 quotient.counit_of(px) == h.counit()[x] && p * h.antipode().col(x) == quotient.apply_antipode(px);
      for (std::size_t y = 0; y < n && morphism; ++y)
        morphism = p * h.basis_product(x, y) == quotient.multiply(px, p.col(y));
    }
    checks.record(kModule, name + ": projection-is-hopf-map", morphism);
    const HopfReport report = verify_hopf(quotient);
    const AxiomCheck* bad = report.first_failure();
    checks.record(kModule, name + ": quotient-hopf-axioms", bad == nullptr, bad ? bad->axiom + " at " + bad->witness : "");
  }
  return QuotientHopf{std::move(quotient), std::move(maps.projection), std::move(maps.section)};
}

std::vector<QVector> strong_cocommutativity_relations(const FinDimCoalgebra& c) {
  const std::size_t n = c.dim();
  std::vector<QVector> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < n; ++i) {
      QVector v(n);
      for (const auto& t : c.coproduct_terms(x)) {
        if (t.a == i) v[t.b] += t.c;
        if (t.b == i) v[t.a] -= t.c;
      }
      if (!is_zero_vector(v)) out.push_back(std::move(v));
    }
  return out;
}

std::vector<QVector> lazy_cocommutativity_relations(const FinDimHopf& h) {
  const std::size_t n = h.dim();
  std::vector<QVector> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<QVector> per_phi(n, QVector(n * n));
      for (const auto& p : h.coproduct_terms(x))
        for (const auto& q : h.coproduct_terms(y)) {
          const Rational c = p.c * q.c;
          for (const auto& m : h.product_terms(p.b, q.b)) per_phi[m.k][p.a * n + q.a] += c * m.c;
          for (const auto& m : h.product_terms(p.a, q.a)) per_phi[m.k][p.b * n + q.b] -= c * m.c;
        }
      for (auto& v : per_phi)
        if (!is_zero_vector(v)) out.push_back(std::move(v));
    }
  return out;
}

bool strong_cocommutativity_holds(const FinDimCoalgebra& source, const QMatrix& p) {
  const std::size_t n = source.dim(), q = p.rows();
  for (std::size_t x = 0; x < n; ++x) {
    QVector left(q * n), right(q * n);
    for (const auto& t : source.coproduct_terms(x))
      for (std::size_t i = 0; i < q; ++i) {
        if (!is_zero(p(i, t.a))) left[i * n + t.b] += t.c * p(i, t.a);
        if (!is_zero(p(i, t.b))) right[i * n + t.a] += t.c * p(i, t.b);
      }
    if (left != right) return false;
  }
  return true;
}

bool lazy_cocommutativity_holds(const FinDimHopf& h, const QMatrix& p) {
  const std::size_t n = h.dim(), q = p.rows();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      QVector left(q * n), right(q * n);
      for (const auto& a : h.coproduct_terms(x))
        for (const auto& b : h.coproduct_terms(y)) {
          const Rational c = a.c * b.c;
          for (std::size_t i = 0; i < q; ++i) {
            const Rational& l = p(i, a.a * n + b.a);
            const Rational& r = p(i, a.b * n + b.b);
            if (!is_zero(l))
              for (const auto& m : h.product_terms(a.b, b.b)) left[i * n + m.k] += c * l * m.c;
            if (!is_zero(r))
              for (const auto& m : h.product_terms(a.a, b.a)) right[i * n + m.k] += c * r * m.c;
          }
        }
      if (left != right) return false;
    }
  return true;
}

QuotientCoalgebra lazy_quotient_c1(const FinDimCoalgebra& c, Checks& checks) {
  QuotientCoalgebra out = quotient_coalgebra(c, strong_cocommutativity_relations(c), checks);
  if (checks.enabled()) {
    checks.record(kModule, "C[1]: strong-cocommutativity", strong_cocommutativity_holds(c, out.projection));
    checks.record(kModule, "C[1]: cocommutative", out.quotient.is_cocommutative());
  }
  return out;
}

QuotientCoalgebra lazy_quotient_h2(const FinDimHopf& h, Checks& checks) {
  const FinDimHopf sq = tensor_square(h);
  QuotientCoalgebra out = quotient_coalgebra(sq.coalgebra(), lazy_cocommutativity_relations(h), checks);
  if (checks.enabled()) {
    checks.record(kModule, "H[2]: lazy-cocommutativity", lazy_cocommutativity_holds(h, out.projection));
    checks.record(kModule, "H[2]: cocommutative", out.quotient.is_cocommutative());
  }
  return out;
}

QuotientHopf hopf_quotient_h1angle(const FinDimHopf& h, Checks& checks) {
  QuotientHopf out = quotient_hopf(h, strong_cocommutativity_relations(h.coalgebra()), h.name() + "<1>", checks);
  if (checks.enabled()) checks.record(kModule, "H<1>: cocommutative", out.quotient.is_cocommutative());
  return out;
}

QuotientHopf abelianization(const FinDimHopf& h, Checks& checks) {
  const std::size_t n = h.dim();
  std::vector<QVector> commutators;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      QVector c = h.basis_product(i, j);
      const QVector d = h.basis_product(j, i);
      for (std::size_t k = 0; k < n; ++k) c[k] -= d[k];
      if (!is_zero_vector(c)) commutators.push_back(std::move(c));
    }
  QuotientHopf out = quotient_hopf(h, commutators, h.name() + "_ab", checks);
  if (checks.enabled()) checks.record(kModule, "ab: commutative", out.quotient.is_commutative());
  return out;
}

QuotientHopf h1_lazy(const FinDimHopf& h, Checks& checks) {
  QuotientHopf angle = hopf_quotient_h1angle(h, checks);
  QuotientHopf ab = abelianization(angle.quotient, checks);
  QuotientHopf out{std::move(ab.quotient), ab.projection * angle.projection, angle.section * ab.section};
  if (checks.enabled())
    checks.record(kModule, "H1: commutative and cocommutative",
                  out.quotient.is_commutative() && out.quotient.is_cocommutative());
  return out;
}

std::optional<FiniteGroup> grouplike_group(const QuotientHopf& q, const std::vector<std::string>& source_labels) {
  const FinDimHopf& hq = q.quotient;
  const std::size_t d = hq.dim();
  std::vector<QVector> elems;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < q.projection.cols(); ++x) {
    QVector g = q.projection.col(x);
    const Rational e = hq.counit_of(g);
    if (is_zero(e)) continue;
    for (auto& v : g) v /= e;
    QVector gg(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) gg[i * d + j] = g[i] * g[j];
    if (hq.coproduct(g) != gg) continue;
    if (std::find(elems.begin(), elems.end(), g) != elems.end()) continue;
    elems.push_back(std::move(g));
    labels.push_back(source_labels[x]);
  }
  if (elems.size() != d) return std::nullopt;
  std::vector<std::size_t> table(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto it = std::find(elems.begin(), elems.end(), hq.multiply(elems[a], elems[b]));
      if (it == elems.end()) return std::nullopt;
      table[a * d + b] = static_cast<std::size_t>(it - elems.begin());
    }
  return FiniteGroup("G(" + hq.name() + ")", std::move(labels), std::move(table));
}

}  // namespace lazyhom
