#pragma once

#include "lazyhom/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lazyhom {

struct Rref {
  QMatrix reduced;                  // same shape as the input
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
  std::size_t rank() const noexcept { return pivots.size(); }
};

Rref rref(QMatrix m);
std::size_t rank(const QMatrix& m);

/// Basis of the right null space {v : m v = 0}. One vector per free column,
/// with a 1 in that column.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<QMatrix> inverse(const QMatrix& a);

/// A subspace kept in reduced row echelon form, for membership tests and
/// incremental growth.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, std::span<const QVector> gens);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<QVector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v against the basis; the result is zero iff v is in the span.
  QVector reduce(QVector v) const;
  bool contains(const QVector& v) const { return is_zero_vector(reduce(v)); }
  /// Adds v; returns false if it was already in the span.
  bool add(const QVector& v);

 private:
  std::size_t ambient_;
  std::vector<QVector> rows_;        // fully reduced, pivot entry 1
  std::vector<std::size_t> pivots_;  // parallel to rows_
};

/// Linear maps onto V / span(gens). The quotient basis is the image of the
/// standard basis vectors in non-pivot coordinates of the RREF of gens, in
/// increasing order; section sends quotient basis vector k to e_{complement[k]}.
struct QuotientMaps {
  QMatrix projection;                   // (n - r) x n
  QMatrix section;                      // n x (n - r)
  std::vector<std::size_t> complement;  // ambient coordinates kept
  Subspace relations;                   // the killed subspace
};

QuotientMaps quotient_space(std::size_t ambient_dim, std::span<const QVector> subspace_gens);

struct Smith {
  ZMatrix u, d, v;  // u * a * v == d
};

/// Smith normal form by elementary operations, pivoting on the entry of
/// least absolute value. Diagonal entries are nonnegative with d_i | d_{i+1}.
Smith smith_normal_form(const ZMatrix& a);

/// Row-style Hermite normal form with zero rows dropped: pivots positive,
/// entries above each pivot reduced into [0, pivot).
ZMatrix hermite_rows(const ZMatrix& a);

struct ColumnHermite {
  ZMatrix h;  // a * v, lower column echelon form
  ZMatrix v;  // unimodular
  std::size_t rank = 0;
};
ColumnHermite column_hermite(const ZMatrix& a);

/// Lattice basis of {v in Z^n : map v = 0}, returned in row Hermite form.
std::vector<ZVector> abelian_kernel(const ZMatrix& map_matrix);

/// Integer coordinates of v with respect to the rows of a row Hermite basis,
/// or nullopt when v is not in the lattice they span.
std::optional<ZVector> lattice_coordinates(const ZMatrix& hermite_basis, ZVector v);

/// Exact determinant by fraction-free elimination.
Integer determinant(const ZMatrix& a);

}  // namespace lazyhom
