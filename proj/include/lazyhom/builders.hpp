#pragma once

#include "lazyhom/group.hpp"
#include "lazyhom/hopf.hpp"

#include <string>
#include <vector>

namespace lazyhom {

/// k[G]: basis G, every g grouplike, S(g) = g^-1.
FinDimHopf group_algebra(const FiniteGroup& g);

/// k^G: basis of point functions e_g with e_g e_h = δ(g,h) e_g and
/// Δ(e_g) = sum over ab = g of e_a ⊗ e_b.
FinDimHopf function_algebra(const FiniteGroup& g);

/// Sweedler's four-dimensional algebra on the basis {1, g, x, y = xg}.
FinDimHopf sweedler_h4();

FinDimHopf dual(const FinDimHopf& h);

/// H ⊗ H with basis e_i ⊗ e_j at index i * dim + j.
FinDimHopf tensor_square(const FinDimHopf& h);

/// Resolves "sweedler", "group:<G>" and "functions:<G>".
FinDimHopf builtin_hopf(const std::string& spec);
std::vector<std::string> builtin_hopf_names();

}  // namespace lazyhom
