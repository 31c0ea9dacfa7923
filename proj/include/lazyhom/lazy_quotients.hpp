#pragma once

#include "lazyhom/checks.hpp"
#include "lazyhom/group.hpp"
#include "lazyhom/hopf.hpp"

#include <optional>
#include <span>

namespace lazyhom {

struct QuotientCoalgebra {
  FinDimCoalgebra quotient;
  QMatrix projection;  // quotient dim x source dim
  QMatrix section;     // source dim x quotient dim
  std::vector<QVector> relations;  // basis of the killed subspace
};

struct QuotientHopf {
  FinDimHopf quotient;
  QMatrix projection;
  QMatrix section;
};

/// Quotient of c by span(relations), with the induced coproduct and counit.
/// Checks that the subspace is a coideal and that the projection is a
/// coalgebra map.
QuotientCoalgebra quotient_coalgebra(const FinDimCoalgebra& c, std::span<const QVector> relations, Checks& checks);

/// Quotient of h by the two-sided ideal generated by gens. Checks that the
/// ideal is a Hopf ideal and that the quotient passes verify_hopf.
QuotientHopf quotient_hopf(const FinDimHopf& h, std::span<const QVector> gens, const std::string& name, Checks& checks);

/// Basis of the two-sided ideal generated by gens.
std::vector<QVector> ideal_closure(const FinDimHopf& h, std::span<const QVector> gens);

/// The vectors φ_i(x1) x2 - φ_i(x2) x1 over basis x and dual basis φ_i.
std::vector<QVector> strong_cocommutativity_relations(const FinDimCoalgebra& c);
/// The vectors φ_i(x2 y2) x1 ⊗ y1 - φ_i(x1 y1) x2 ⊗ y2 in H ⊗ H.
std::vector<QVector> lazy_cocommutativity_relations(const FinDimHopf& h);

QuotientCoalgebra lazy_quotient_c1(const FinDimCoalgebra& c, Checks& checks);
QuotientCoalgebra lazy_quotient_h2(const FinDimHopf& h, Checks& checks);
QuotientHopf hopf_quotient_h1angle(const FinDimHopf& h, Checks& checks);
QuotientHopf abelianization(const FinDimHopf& h, Checks& checks);
/// First lazy homology as the abelianization of H^<1>; the projection is
/// the composite from h.
QuotientHopf h1_lazy(const FinDimHopf& h, Checks& checks);

/// (P ⊗ id)(Δx) = (P ⊗ id)(flip Δx) for every basis x of the source.
bool strong_cocommutativity_holds(const FinDimCoalgebra& source, const QMatrix& projection);
/// (x1 ⊗ y1)~ ⊗ x2 y2 = (x2 ⊗ y2)~ ⊗ x1 y1 in H^[2] ⊗ H for every basis pair.
bool lazy_cocommutativity_holds(const FinDimHopf& h, const QMatrix& projection);

/// When the quotient is spanned by grouplike images of source basis
/// elements, the group they form; nullopt otherwise.
std::optional<FiniteGroup> grouplike_group(const QuotientHopf& q, const std::vector<std::string>& source_labels);

}  // namespace lazyhom
