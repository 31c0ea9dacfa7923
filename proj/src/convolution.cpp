#include "lazyhom/convolution.hpp"

#include "lazyhom/errors.hpp"
#include "lazyhom/linalg.hpp"

namespace lazyhom {

Rational LinearFunctional::operator()(const QVector& x) const {
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) s += x[i] * coeffs[i];
  return s;
}

LinearFunctional counit_functional(const FinDimCoalgebra& c) { return {c.counit()}; }

LinearFunctional convolve(const FinDimCoalgebra& c, const LinearFunctional& f, const LinearFunctional& g) {
  if (f.coeffs.size() != c.dim() || g.coeffs.size() != c.dim())
    throw DimensionMismatch("hopf-core", "functional length does not match the coalgebra dimension");
  LinearFunctional out{QVector(c.dim())};
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (const auto& t : c.coproduct_terms(i)) out.coeffs[i] += t.c * f(t.a) * g(t.b);
  return out;
}

LinearFunctional conv_inverse(const FinDimCoalgebra& c, const LinearFunctional& f) {
  const std::size_t n = c.dim();
  if (f.coeffs.size() != n) throw DimensionMismatch("hopf-core", "functional length does not match the coalgebra dimension");
  // Row i: sum over Δe_i of c f(a) g(b) = ε(e_i), linear in the values of g.
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : c.coproduct_terms(i)) a(i, t.b) += t.c * f(t.a);
  auto g = solve(a, c.counit());
  if (!g) throw NotInvertible("functional has no right convolution inverse");
  LinearFunctional inv{std::move(*g)};
  if (convolve(c, inv, f) != counit_functional(c)) throw NotInvertible("right convolution inverse is not a left inverse");
  return inv;
}

bool is_lazy(const FinDimHopf& h, const LinearFunctional& mu) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    QVector left(h.dim()), right(h.dim());
    for (const auto& t : h.coproduct_terms(i)) {
      left[t.b] += t.c * mu(t.a);
      right[t.a] += t.c * mu(t.b);
    }
    if (left != right) return false;
  }
  return true;
}

bool is_lazy2(const FinDimHopf& h, const LinearFunctional& sigma) {
  const std::size_t n = h.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      QVector left(n), right(n);
      for (const auto& p : h.coproduct_terms(x))
        for (const auto& q : h.coproduct_terms(y)) {
          const Rational c = p.c * q.c;
          const Rational sl = sigma(p.a * n + q.a), sr = sigma(p.b * n + q.b);
          if (!is_zero(sl))
            for (const auto& m : h.product_terms(p.b, q.b)) left[m.k] += c * sl * m.c;
          if (!is_zero(sr))
            for (const auto& m : h.product_terms(p.a, q.a)) right[m.k] += c * sr * m.c;
        }
      if (left != right) return false;
    }
  return true;
}

bool is_left_2cocycle(const FinDimHopf& h, const LinearFunctional& sigma) {
  const std::size_t n = h.dim();
  for (std::size_t x = 0; x < n; ++x) {
    Rational right1, left1;
    for (std::size_t u = 0; u < n; ++u) {
      right1 += h.unit()[u] * sigma(x * n + u);
      left1 += h.unit()[u] * sigma(u * n + x);
    }
    if (right1 != h.counit()[x] || left1 != h.counit()[x]) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Rational left, right;
        for (const auto& p : h.coproduct_terms(x))
          for (const auto& q : h.coproduct_terms(y)) {
            const Rational s = sigma(p.a * n + q.a);
            if (is_zero(s)) continue;
            for (const auto& m : h.product_terms(p.b, q.b)) left += p.c * q.c * s * m.c * sigma(m.k * n + z);
          }
        for (const auto& q : h.coproduct_terms(y))
          for (const auto& r : h.coproduct_terms(z)) {
            const Rational s = sigma(q.a * n + r.a);
            if (is_zero(s)) continue;
            for (const auto& m : h.product_terms(q.b, r.b)) right += q.c * r.c * s * m.c * sigma(x * n + m.k);
          }
        if (left != right) return false;
      }
  return true;
}

LinearFunctional coboundary(const FinDimHopf& h, const LinearFunctional& mu) {
  if (mu(h.unit()) != 1) throw NotInvertible("coboundary needs a normalized functional, μ(1) != 1");
  const LinearFunctional inv = conv_inverse(h.coalgebra(), mu);
  const std::size_t n = h.dim();
  LinearFunctional out{QVector(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational s;
      for (const auto& p : h.coproduct_terms(x))
        for (const auto& q : h.coproduct_terms(y)) {
          const Rational c = p.c * q.c * mu(p.a) * mu(q.a);
          if (is_zero(c)) continue;
          for (const auto& m : h.product_terms(p.b, q.b)) s += c * m.c * inv(m.k);
        }
      out.coeffs[x * n + y] = s;
    }
  return out;
}

}  // namespace lazyhom
