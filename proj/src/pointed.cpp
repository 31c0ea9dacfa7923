#include "lazyhom/pointed.hpp"

#include "lazyhom/errors.hpp"
#include "lazyhom/linalg.hpp"

namespace lazyhom {

std::vector<QVector> columns_of(const QMatrix& m) {
  std::vector<QVector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

namespace {

QVector tensor(const QVector& a, const QVector& b) {
  const std::size_t n = a.size();
  QVector out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(b[j])) out[i * n + j] = a[i] * b[j];
  }
  return out;
}

/// Solutions v of Δv = g ⊗ v + v ⊗ h.
std::vector<QVector> skew_space(const FinDimCoalgebra& c, const QVector& g, const QVector& h) {
  const std::size_t n = c.dim();
  QMatrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const QVector e = unit_vector(n, j);
    QVector col = c.coproduct(e);
    const QVector left = tensor(g, e), right = tensor(e, h);
    for (std::size_t r = 0; r < n * n; ++r) m(r, j) = col[r] - left[r] - right[r];
  }
  return kernel_basis(m);
}

}  // namespace

PointedCoalgebra pointed_profile(const FinDimCoalgebra& c, const std::vector<QVector>& candidates) {
  const std::size_t n = c.dim();
  PointedCoalgebra out;
  out.underlying = c;
  Subspace span(n);

  for (const auto& cand : candidates) {
    if (cand.size() != n) throw DimensionMismatch("hopf-core", "candidate length does not match the coalgebra dimension");
    const Rational e = c.counit_of(cand);
    if (is_zero(e)) continue;
    QVector g = cand;
    for (auto& v : g) v /= e;
    if (c.coproduct(g) != tensor(g, g)) continue;
    // Distinct grouplikes are linearly independent, so span membership
    // detects repeats.
    if (span.add(g)) out.grouplikes.push_back(std::move(g));
  }

  if (span.dim() < n) {
    for (std::size_t gi = 0; gi < out.grouplikes.size(); ++gi) {
      const QVector& g = out.grouplikes[gi];
      const auto space = skew_space(c, g, g);
      const Subspace sp(n, space);
      for (const auto& cand : candidates)
        if (sp.contains(cand) && span.add(cand)) out.skew_primitives.push_back({cand, gi});
      for (const auto& v : space)
        if (span.add(v)) out.skew_primitives.push_back({v, gi});
    }
    for (std::size_t gi = 0; gi < out.grouplikes.size(); ++gi)
      for (std::size_t hi = 0; hi < out.grouplikes.size(); ++hi) {
        if (gi == hi) continue;
        const auto space = skew_space(c, out.grouplikes[gi], out.grouplikes[hi]);
        if (space.size() > 1) out.mixed_pairs.push_back({gi, hi, space.size() - 1});
      }
  }

  if (span.dim() < n) {
    std::string detail = "coalgebra of dimension " + std::to_string(n) + " is not spanned by " +
                         std::to_string(out.grouplikes.size()) + " grouplikes and " +
                         std::to_string(out.skew_primitives.size()) + " (g,g)-skew-primitives; complement dimension " +
                         std::to_string(n - span.dim());
    if (!out.mixed_pairs.empty())
      detail += "; " + std::to_string(out.mixed_pairs.size()) + " pairs of distinct grouplikes carry skew-primitives";
    throw UnsupportedShape("hopf-core", detail);
  }

  QMatrix basis(n, n);
  std::size_t k = 0;
  for (const auto& g : out.grouplikes) {
    for (std::size_t i = 0; i < n; ++i) basis(i, k) = g[i];
    ++k;
  }
  for (const auto& s : out.skew_primitives) {
    for (std::size_t i = 0; i < n; ++i) basis(i, k) = s.element[i];
    ++k;
  }
  out.coordinates = *inverse(basis);
  return out;
}

}  // namespace lazyhom
