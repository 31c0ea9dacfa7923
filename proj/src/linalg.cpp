#include "lazyhom/linalg.hpp"

#include "lazyhom/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lazyhom {

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

namespace {

template <typename T, typename Fmt>
std::string render(const Matrix<T>& m, Fmt fmt) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << fmt(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const QMatrix& m) { return render(m, format_rational); }
std::string to_string(const ZMatrix& m) {
  return render(m, [](const Integer& z) { return z.get_str(); });
}

// ---------------------------------------------------------------------------
// Rational elimination

Rref rref(QMatrix m) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, row);
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("exact-linalg", "right-hand side length differs from row count");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  QVector x(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

std::optional<QMatrix> inverse(const QMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("exact-linalg", "inverse of a non-square matrix");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(std::move(aug));
  if (r.rank() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

Subspace::Subspace(std::size_t ambient_dim, std::span<const QVector> gens) : ambient_(ambient_dim) {
  if (gens.empty()) return;
  Rref r = rref(QMatrix::from_rows(gens, ambient_dim));
  for (std::size_t i = 0; i < r.rank(); ++i) {
    rows_.push_back(r.reduced.row(i));
    pivots_.push_back(r.pivots[i]);
  }
}

QVector Subspace::reduce(QVector v) const {
  if (v.size() != ambient_) throw DimensionMismatch("exact-linalg", "vector outside the ambient space");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (is_zero(f)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!is_zero(rows_[i][j])) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool Subspace::add(const QVector& v) {
  QVector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& q) { return !is_zero(q); });
  if (it == r.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - r.begin());
  Rational inv = 1 / r[piv];
  for (auto& x : r) x *= inv;
  for (auto& row : rows_) {
    const Rational f = row[piv];
    if (is_zero(f)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!is_zero(r[j])) row[j] -= f * r[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

QuotientMaps quotient_space(std::size_t ambient_dim, std::span<const QVector> subspace_gens) {
  Subspace rel(ambient_dim, subspace_gens);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : rel.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) complement.push_back(j);
  std::vector<std::size_t> slot(ambient_dim, 0);
  for (std::size_t k = 0; k < complement.size(); ++k) slot[complement[k]] = k;

  const std::size_t q = complement.size();
  QMatrix proj(q, ambient_dim), sec(ambient_dim, q);
  for (std::size_t k = 0; k < q; ++k) {
    proj(k, complement[k]) = 1;
    sec(complement[k], k) = 1;
  }
  // e_p for a pivot p equals (e_p - row) + row; the row lies in the kernel, and
  // e_p - row only involves non-pivot coordinates.
  for (std::size_t i = 0; i < rel.dim(); ++i) {
    const auto& row = rel.basis()[i];
    for (std::size_t j = 0; j < ambient_dim; ++j)
      if (!is_pivot[j] && !is_zero(row[j])) proj(slot[j], rel.pivots()[i]) = -row[j];
  }
  return QuotientMaps{std::move(proj), std::move(sec), std::move(complement), std::move(rel)};
}

// ---------------------------------------------------------------------------
// Integer normal forms

namespace {

void add_row_multiple(ZMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (sgn(m(source, j)) != 0) m(target, j) += f * m(source, j);
}

void add_col_multiple(ZMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (sgn(m(i, source)) != 0) m(i, target) += f * m(i, source);
}

void negate_row(ZMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void negate_col(ZMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// Replaces rows (a, b) by (s*a + t*b, -(b/g)*a... ) so that entry (a,col) becomes
// gcd and (b,col) becomes 0. The 2x2 transform has determinant 1.
void gcd_rows(ZMatrix& m, std::size_t a, std::size_t b, std::size_t col, ZMatrix* track) {
  Integer x = m(a, col), y = m(b, col), g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Integer xg = x / g, yg = y / g;
  auto apply = [&](ZMatrix& mat) {
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      Integer ra = mat(a, j), rb = mat(b, j);
      mat(a, j) = s * ra + t * rb;
      mat(b, j) = -yg * ra + xg * rb;
    }
  };
  apply(m);
  if (track) apply(*track);
}

void gcd_cols(ZMatrix& m, std::size_t a, std::size_t b, std::size_t row, ZMatrix* track) {
  Integer x = m(row, a), y = m(row, b), g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Integer xg = x / g, yg = y / g;
  auto apply = [&](ZMatrix& mat) {
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      Integer ca = mat(i, a), cb = mat(i, b);
      mat(i, a) = s * ca + t * cb;
      mat(i, b) = -yg * ca + xg * cb;
    }
  };
  apply(m);
  if (track) apply(*track);
}

}  // namespace

Smith smith_normal_form(const ZMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  ZMatrix d = a, u = ZMatrix::identity(m), v = ZMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Least nonzero |entry| in the trailing block goes to (t, t).
    auto bring_min = [&](std::size_t r0, std::size_t c0) -> bool {
      bool found = false;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = r0; i < m; ++i)
        for (std::size_t j = c0; j < n; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (!found || mpz_cmpabs(d(i, j).get_mpz_t(), d(bi, bj).get_mpz_t()) < 0) {
            found = true;
            bi = i;
            bj = j;
          }
        }
      if (!found) return false;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);
      return true;
    };
    if (!bring_min(t, t)) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder now sits in row or column t.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0 && mpz_cmpabs(d(i, t).get_mpz_t(), d(bi, bj).get_mpz_t()) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(t, j)) != 0 && mpz_cmpabs(d(t, j).get_mpz_t(), d(bi, bj).get_mpz_t()) < 0) bi = t, bj = j;
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into row t and go again.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row_multiple(d, t, i, 1);
            add_row_multiple(u, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (sgn(d(t, t)) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return Smith{std::move(u), std::move(d), std::move(v)};
}

ZMatrix hermite_rows(const ZMatrix& a) {
  ZMatrix h = a;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    std::size_t first = row;
    while (first < h.rows() && sgn(h(first, col)) == 0) ++first;
    if (first == h.rows()) continue;
    h.swap_rows(first, row);
    for (std::size_t i = row + 1; i < h.rows(); ++i)
      if (sgn(h(i, col)) != 0) gcd_rows(h, row, i, col, nullptr);
    if (sgn(h(row, col)) < 0) negate_row(h, row);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
      if (sgn(q) != 0) add_row_multiple(h, i, row, -q);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  ZMatrix out(row, h.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

ColumnHermite column_hermite(const ZMatrix& a) {
  ColumnHermite out{a, ZMatrix::identity(a.cols()), 0};
  ZMatrix& h = out.h;
  std::size_t col = 0;
  for (std::size_t row = 0; row < h.rows() && col < h.cols(); ++row) {
    std::size_t first = col;
    while (first < h.cols() && sgn(h(row, first)) == 0) ++first;
    if (first == h.cols()) continue;
    h.swap_cols(first, col);
    out.v.swap_cols(first, col);
    for (std::size_t j = col + 1; j < h.cols(); ++j)
      if (sgn(h(row, j)) != 0) gcd_cols(h, col, j, row, &out.v);
    if (sgn(h(row, col)) < 0) {
      negate_col(h, col);
      negate_col(out.v, col);
    }
    ++col;
  }
  out.rank = col;
  return out;
}

std::vector<ZVector> abelian_kernel(const ZMatrix& map_matrix) {
  ColumnHermite ch = column_hermite(map_matrix);
  const std::size_t n = map_matrix.cols();
  if (ch.rank == n) return {};
  ZMatrix k(n - ch.rank, n);
  for (std::size_t c = ch.rank; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) k(c - ch.rank, i) = ch.v(i, c);
  ZMatrix hk = hermite_rows(k);
  std::vector<ZVector> basis;
  for (std::size_t i = 0; i < hk.rows(); ++i) basis.push_back(hk.row(i));
  return basis;
}

std::optional<ZVector> lattice_coordinates(const ZMatrix& hermite_basis, ZVector v) {
  if (v.size() != hermite_basis.cols()) throw DimensionMismatch("exact-linalg", "lattice vector length mismatch");
  ZVector c(hermite_basis.rows());
  for (std::size_t i = 0; i < hermite_basis.rows(); ++i) {
    std::size_t piv = 0;
    while (piv < hermite_basis.cols() && sgn(hermite_basis(i, piv)) == 0) ++piv;
    for (std::size_t j = 0; j < piv; ++j)
      if (sgn(v[j]) != 0) return std::nullopt;
    if (!mpz_divisible_p(v[piv].get_mpz_t(), hermite_basis(i, piv).get_mpz_t())) return std::nullopt;
    c[i] = v[piv] / hermite_basis(i, piv);
    for (std::size_t j = piv; j < v.size(); ++j) v[j] -= c[i] * hermite_basis(i, j);
  }
  for (const auto& x : v)
    if (sgn(x) != 0) return std::nullopt;
  return c;
}

Integer determinant(const ZMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("exact-linalg", "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  ZMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace lazyhom
