#pragma once

#include "lazyhom/matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lazyhom {

/// Z^n / <relations>, normalized to invariant factors d_1 | d_2 | ... with
/// trivial (d = 1) factors dropped; a factor 0 stands for a copy of Z.
class FPAbelianGroup {
 public:
  FPAbelianGroup() = default;

  static FPAbelianGroup trivial() { return {}; }

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }

  std::size_t free_rank() const;
  std::vector<Integer> torsion() const;
  bool is_trivial() const noexcept { return factors_.empty(); }
  bool is_finite() const { return free_rank() == 0; }
  /// Group order, or nullopt for infinite groups.
  std::optional<Integer> order() const;

  /// Coordinates of the class of an exponent vector in the invariant-factor
  /// decomposition: entry i lies in [0, d_i) (or is any integer when d_i = 0).
  ZVector normal_form(const ZVector& exponents) const;
  bool is_identity(const ZVector& exponents) const;

  /// "Z/2 ⊕ Z" style; "0" for the trivial group.
  std::string to_string() const;

  friend bool same_invariants(const FPAbelianGroup& a, const FPAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

  friend FPAbelianGroup fp_abelian_group(std::size_t, std::span<const ZVector>, std::vector<std::string>);

 private:
  std::vector<std::string> generators_;
  std::vector<Integer> factors_;
  // Rows of the inverse column transform restricted to the nontrivial factors:
  // the class of x has coordinates witness_ * x.
  ZMatrix witness_;
};

/// Z^num_gens modulo the span of the relation vectors.
FPAbelianGroup fp_abelian_group(std::size_t num_gens, std::span<const ZVector> relations,
                                std::vector<std::string> labels = {});

/// Builds the group from explicit invariant factors (for expected values in
/// tests and descriptors).
FPAbelianGroup abelian_group_from_factors(std::vector<Integer> factors);

}  // namespace lazyhom
