#pragma once

#include "lazyhom/hopf.hpp"

#include <string>
#include <vector>

namespace lazyhom {

/// (g,g)-skew-primitive element: Δh = g ⊗ h + h ⊗ g.
struct SkewPrimitive {
  QVector element;
  std::size_t grouplike;  // index into PointedCoalgebra::grouplikes
};

/// Pair of distinct grouplikes carrying nontrivial skew-primitives. These
/// are reported but not supported by the free commutative construction.
struct MixedSkewPair {
  std::size_t g, h;
  std::size_t dim;  // dimension modulo the trivial span of g - h
};

/// Basis of a coalgebra made of grouplikes followed by skew-primitives.
struct PointedCoalgebra {
  FinDimCoalgebra underlying;
  std::vector<QVector> grouplikes;
  std::vector<SkewPrimitive> skew_primitives;
  std::vector<MixedSkewPair> mixed_pairs;
  /// coordinates * v expresses v in the pointed basis (grouplikes first).
  QMatrix coordinates;

  std::size_t size() const noexcept { return grouplikes.size() + skew_primitives.size(); }
};

/// Grouplikes are the ε-normalized candidates satisfying Δg = g ⊗ g; for each
/// one the (g,g)-skew-primitive space is solved linearly, preferring
/// candidates as basis vectors. Throws UnsupportedShape when grouplikes and
/// skew-primitives do not span the coalgebra.
PointedCoalgebra pointed_profile(const FinDimCoalgebra& c, const std::vector<QVector>& candidates);

/// Columns of an n x n (or q x n) matrix as vectors, e.g. images of basis
/// elements under a projection.
std::vector<QVector> columns_of(const QMatrix& m);

}  // namespace lazyhom
