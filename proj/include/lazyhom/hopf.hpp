#pragma once

#include "lazyhom/matrix.hpp"

#include <string>
#include <vector>

namespace lazyhom {

/// Dense n x n x n array of structure constants.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t extent() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// c * e_a (x) e_b
struct PairTerm {
  std::size_t a, b;
  Rational c;
};
/// c * e_k
struct Term {
  std::size_t k;
  Rational c;
};

/// Coalgebra on a labelled basis: comult(i, j, k) is the coefficient of
/// e_j (x) e_k in the coproduct of e_i. Tensor-square vectors are flattened
/// with index j * dim + k.
class FinDimCoalgebra {
 public:
  FinDimCoalgebra() = default;
  FinDimCoalgebra(std::vector<std::string> labels, Tensor3 comult, QVector counit);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Tensor3& comult() const noexcept { return comult_; }
  const QVector& counit() const noexcept { return counit_; }

  const std::vector<PairTerm>& coproduct_terms(std::size_t i) const { return coproduct_terms_[i]; }
  QVector coproduct(const QVector& x) const;
  Rational counit_of(const QVector& x) const;
  bool is_cocommutative() const;

 protected:
  std::vector<std::string> labels_;
  Tensor3 comult_;
  QVector counit_;
  std::vector<std::vector<PairTerm>> coproduct_terms_;
};

/// Finite-dimensional Hopf algebra: mult(i, j, k) is the coefficient of e_k in
/// e_i e_j, antipode(j, i) the coefficient of e_j in S(e_i).
class FinDimHopf : public FinDimCoalgebra {
 public:
  FinDimHopf() = default;
  FinDimHopf(std::string name, std::vector<std::string> labels, Tensor3 mult, QVector unit, Tensor3 comult, QVector counit,
             QMatrix antipode);

  const std::string& name() const noexcept { return name_; }
  const Tensor3& mult() const noexcept { return mult_; }
  const QVector& unit() const noexcept { return unit_; }
  const QMatrix& antipode() const noexcept { return antipode_; }

  const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const { return product_terms_[i * dim() + j]; }
  QVector multiply(const QVector& a, const QVector& b) const;
  QVector basis_product(std::size_t i, std::size_t j) const;
  QVector apply_antipode(const QVector& x) const { return antipode_ * x; }
  bool is_commutative() const;

  /// The underlying coalgebra.
  const FinDimCoalgebra& coalgebra() const noexcept { return *this; }

 private:
  std::string name_;
  Tensor3 mult_;
  QVector unit_;
  QMatrix antipode_;
  std::vector<std::vector<Term>> product_terms_;
};

struct AxiomCheck {
  std::string axiom;    // assoc, unit, coassoc, counit, bialgebra, antipode
  bool passed = true;
  std::string witness;  // basis labels where the identity first fails
};

struct HopfReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* first_failure() const;
};

HopfReport verify_coalgebra(const FinDimCoalgebra& c);
HopfReport verify_hopf(const FinDimHopf& h);

}  // namespace lazyhom
