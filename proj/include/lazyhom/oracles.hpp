#pragma once

#include "lazyhom/abelian.hpp"
#include "lazyhom/group.hpp"

#include <string>
#include <vector>

namespace lazyhom {

FiniteGroup group_center(const FiniteGroup& g);

/// Z^G modulo e_a + e_b - e_ab.
FPAbelianGroup group_abelianization(const FiniteGroup& g);

/// Matrix of the bar differential C_n -> C_{n-1} with C_n = Z[G^n] and
/// ∂(g1..gn) = (g2..gn) + Σ (-1)^i (.., g_i g_{i+1}, ..) + (-1)^n (g1..g_{n-1}).
/// Tuples are indexed in base |G| with g1 most significant.
ZMatrix bar_boundary_serial(const FiniteGroup& g, unsigned n);
ZMatrix bar_boundary_parallel(const FiniteGroup& g, unsigned n);

inline constexpr std::size_t kDefaultMaxGroupOrder = 8;

/// H_degree(G, Z) for degree 1 or 2. Throws UsageError above max_order.
FPAbelianGroup bar_homology(const FiniteGroup& g, unsigned degree, std::size_t max_order = kDefaultMaxGroupOrder,
                            bool parallel = true);

/// Fusion multiplicities d^ν_{λμ} as sparse (λ, μ, ν, m) entries, m > 0.
struct FusionEntry {
  std::size_t lambda, mu, nu;
  unsigned long multiplicity;
};

struct FusionRing {
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<FusionEntry> mult;

  /// Checks index ranges and the unit law d^ν_{1μ} = δ_{μν} = d^ν_{μ1}.
  void validate() const;
};

/// Free abelian group on the labels modulo λ + μ - ν for every d^ν_{λμ} > 0.
FPAbelianGroup fusion_grading(const FusionRing& f);

/// Fusion ring of G-graded vector spaces: λ ⊗ μ = λμ.
FusionRing pointed_fusion(const FiniteGroup& g);

}  // namespace lazyhom
