#pragma once

#include "lazyhom/hopf.hpp"

namespace lazyhom {

/// A linear map from a coalgebra to Q, given by its values on the basis.
/// Functionals on H ⊗ H use the tensor_square indexing x * dim + y.
struct LinearFunctional {
  QVector coeffs;

  Rational operator()(std::size_t i) const { return coeffs[i]; }
  Rational operator()(const QVector& x) const;
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

LinearFunctional counit_functional(const FinDimCoalgebra& c);

/// (f * g)(x) = f(x1) g(x2).
LinearFunctional convolve(const FinDimCoalgebra& c, const LinearFunctional& f, const LinearFunctional& g);

/// Solves f * g = ε exactly and checks g * f = ε. Throws NotInvertible.
LinearFunctional conv_inverse(const FinDimCoalgebra& c, const LinearFunctional& f);

/// μ(x1) x2 = μ(x2) x1 on every basis element.
bool is_lazy(const FinDimHopf& h, const LinearFunctional& mu);

/// σ(x1 ⊗ y1) x2 y2 = σ(x2 ⊗ y2) x1 y1 on every basis pair.
bool is_lazy2(const FinDimHopf& h, const LinearFunctional& sigma);

/// σ(x1 ⊗ y1) σ(x2 y2 ⊗ z) = σ(y1 ⊗ z1) σ(x ⊗ y2 z2) on every basis triple,
/// together with σ(x ⊗ 1) = ε(x) = σ(1 ⊗ x).
bool is_left_2cocycle(const FinDimHopf& h, const LinearFunctional& sigma);

/// ∂μ(x ⊗ y) = μ(x1) μ(y1) μ^-1(x2 y2). Throws NotInvertible when μ has no
/// convolution inverse or μ(1) != 1.
LinearFunctional coboundary(const FinDimHopf& h, const LinearFunctional& mu);

}  // namespace lazyhom
