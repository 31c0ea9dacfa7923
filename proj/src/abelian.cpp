#include "lazyhom/abelian.hpp"

#include "lazyhom/linalg.hpp"

#include <algorithm>

namespace lazyhom {

std::size_t FPAbelianGroup::free_rank() const {
  return static_cast<std::size_t>(std::count_if(factors_.begin(), factors_.end(), [](const Integer& d) { return sgn(d) == 0; }));
}

std::vector<Integer> FPAbelianGroup::torsion() const {
  std::vector<Integer> t;
  for (const auto& d : factors_)
    if (sgn(d) != 0) t.push_back(d);
  return t;
}

std::optional<Integer> FPAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : factors_) {
    if (sgn(d) == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

ZVector FPAbelianGroup::normal_form(const ZVector& exponents) const {
  if (exponents.size() != witness_.cols())
    throw DimensionMismatch("exact-linalg", "exponent vector length differs from generator count");
  ZVector y = witness_ * exponents;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(factors_[i]) != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), factors_[i].get_mpz_t());
  return y;
}

bool FPAbelianGroup::is_identity(const ZVector& exponents) const {
  auto y = normal_form(exponents);
  return std::all_of(y.begin(), y.end(), [](const Integer& z) { return sgn(z) == 0; });
}

std::string FPAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " ⊕ ";
    s += sgn(factors_[i]) == 0 ? std::string("Z") : "Z/" + factors_[i].get_str();
  }
  return s;
}

FPAbelianGroup fp_abelian_group(std::size_t num_gens, std::span<const ZVector> relations, std::vector<std::string> labels) {
  for (const auto& r : relations)
    if (r.size() != num_gens) throw DimensionMismatch("exact-linalg", "relation length differs from generator count");
  if (labels.empty())
    for (std::size_t i = 0; i < num_gens; ++i) labels.push_back("e" + std::to_string(i + 1));

  FPAbelianGroup g;
  g.generators_ = std::move(labels);
  ZMatrix v = ZMatrix::identity(num_gens);
  std::vector<Integer> diag(num_gens, 0);
  if (!relations.empty() && num_gens > 0) {
    Smith s = smith_normal_form(Matrix<Integer>::from_rows(relations, num_gens));
    v = std::move(s.v);
    for (std::size_t j = 0; j < std::min(s.d.rows(), num_gens); ++j) diag[j] = s.d(j, j);
  }
  // Class coordinates of a row vector x are x * v; keep the nontrivial ones.
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < num_gens; ++j)
    if (diag[j] != 1) keep.push_back(j);
  g.witness_ = ZMatrix(keep.size(), num_gens);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    g.factors_.push_back(diag[keep[k]]);
    for (std::size_t i = 0; i < num_gens; ++i) g.witness_(k, i) = v(i, keep[k]);
  }
  return g;
}

FPAbelianGroup abelian_group_from_factors(std::vector<Integer> factors) {
  std::vector<ZVector> rels;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ZVector r(factors.size(), 0);
    r[i] = factors[i];
    rels.push_back(std::move(r));
  }
  return fp_abelian_group(factors.size(), rels);
}

}  // namespace lazyhom
