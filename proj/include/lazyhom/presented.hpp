#pragma once

#include "lazyhom/abelian.hpp"
#include "lazyhom/checks.hpp"
#include "lazyhom/pointed.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lazyhom {

/// T^laurent Y^poly with Laurent exponents in Z and polynomial degrees in N.
struct Monomial {
  std::vector<std::int64_t> laurent;
  std::vector<std::uint32_t> poly;

  auto operator<=>(const Monomial&) const = default;
  bool is_laurent() const;  // no polynomial factor
  unsigned degree() const;  // total polynomial degree
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Finitely supported linear combination of monomials; zero coefficients are
/// never stored.
struct Element {
  std::map<Monomial, Rational> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  void add(const Monomial& m, const Rational& c);
  friend bool operator==(const Element&, const Element&) = default;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator*(const Rational& c, const Element& a);

struct TensorElement {
  std::map<std::pair<Monomial, Monomial>, Rational> terms;

  void add(const Monomial& a, const Monomial& b, const Rational& c);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

TensorElement operator*(const TensorElement& a, const TensorElement& b);
TensorElement tensor(const Element& a, const Element& b);

/// Commutative Hopf algebra k[T_1^±, ..., T_l^±] ⊗ k[Y_1, ..., Y_m] where
/// T_i is grouplike and Y_j is (T^λ_j, T^λ_j)-skew-primitive for the
/// exponent vector λ_j. S(Y_j) = -T^{-2λ_j} Y_j.
class PresentedCommHopf {
 public:
  PresentedCommHopf() = default;
  PresentedCommHopf(std::vector<std::string> laurent_names, std::vector<std::string> poly_names,
                    std::vector<std::vector<std::int64_t>> poly_weights);

  std::size_t num_laurent() const noexcept { return laurent_names_.size(); }
  std::size_t num_poly() const noexcept { return poly_names_.size(); }
  const std::vector<std::string>& laurent_names() const noexcept { return laurent_names_; }
  const std::vector<std::string>& poly_names() const noexcept { return poly_names_; }
  const std::vector<std::int64_t>& weight(std::size_t j) const { return poly_weights_[j]; }

  Monomial unit_monomial() const;
  Element one() const;
  Element laurent(std::size_t i, std::int64_t exponent = 1) const;
  Element laurent_monomial(const std::vector<std::int64_t>& exponents) const;
  Element poly(std::size_t j) const;

  Rational counit(const Element& a) const;
  TensorElement coproduct(const Element& a) const;
  Element antipode(const Element& a) const;

  std::string to_string(const Monomial& m) const;
  std::string to_string(const Element& a) const;

 private:
  std::vector<std::string> laurent_names_, poly_names_;
  std::vector<std::vector<std::int64_t>> poly_weights_;
};

/// m(S ⊗ id)Δ(a) = ε(a) 1 = m(id ⊗ S)Δ(a).
bool antipode_axiom_holds(const PresentedCommHopf& p, const Element& a);

/// Takeuchi's free commutative Hopf algebra on a pointed coalgebra: T_g per
/// grouplike, Y_h per (g,g)-skew-primitive, with t(g) = T_g, t(h) = Y_h,
/// t^-1(g) = T_g^-1 and t^-1(h) = -T_g^-2 Y_h.
struct FreeCommHopf {
  PresentedCommHopf algebra;
  PointedCoalgebra profile;
  std::vector<Element> t_basis;      // t(e_i) for the coalgebra basis
  std::vector<Element> t_inv_basis;  // t^-1(e_i)

  Element t(const QVector& x) const;
  Element t_inv(const QVector& x) const;
};

/// Verifies t(x1) t^-1(x2) = ε(x) 1 = t^-1(x1) t(x2) on every basis element
/// and the antipode axiom on every generator.
FreeCommHopf free_commutative_hopf(const PointedCoalgebra& c, Checks& checks);

/// Algebra map given on generators. Images of Laurent generators must be
/// invertible monomials c T^m so that negative powers are defined.
class PresentedMorphism {
 public:
  PresentedMorphism(PresentedCommHopf source, PresentedCommHopf target, std::vector<Element> laurent_images,
                    std::vector<Element> poly_images);

  const PresentedCommHopf& source() const noexcept { return source_; }
  const PresentedCommHopf& target() const noexcept { return target_; }
  const std::vector<Element>& laurent_images() const noexcept { return laurent_images_; }
  const std::vector<Element>& poly_images() const noexcept { return poly_images_; }

  Element apply(const Element& a) const;
  /// f ⊗ id and id ⊗ f on tensors over the source.
  TensorElement apply_left(const TensorElement& t) const;
  TensorElement apply_right(const TensorElement& t) const;

  /// Δ, ε and S commute with the map on every generator.
  bool is_hopf_morphism() const;

 private:
  PresentedCommHopf source_, target_;
  std::vector<Element> laurent_images_, poly_images_;
  std::vector<Element> laurent_inverses_;
};

/// Hopf kernel of a morphism whose target is purely Laurent, whose Laurent
/// images are grouplike monomials and which kills every Y. The kernel is
/// k[ker(Λ -> Λ')] ⊗ k[X_h] with X_h = T^{-λ_h} Y_h.
struct HopfKernel {
  PresentedCommHopf source;
  PresentedCommHopf algebra;            // Laurent gens K_r, primitive gens X_h
  ZMatrix lattice;                      // row r = exponent vector of K_r in the source
  std::vector<Element> laurent_inclusion, poly_inclusion;

  Element include(const Element& a) const;
  /// Coordinates of a source element in the kernel algebra, or nullopt when
  /// some monomial leaves the kernel lattice.
  std::optional<Element> rewrite(const Element& a) const;
};

/// f(a1) ⊗ a2 = 1 ⊗ a and a1 ⊗ f(a2) = a ⊗ 1.
bool in_hopf_kernel(const PresentedMorphism& f, const Element& a);

HopfKernel hopf_kernel(const PresentedMorphism& f, Checks& checks);

/// k[A] ⊗ k[X_1..X_m] / (linear relations among the X).
struct HomologyDescriptor {
  FPAbelianGroup group_part;
  std::size_t primitive_count = 0;
  QMatrix primitive_relations;  // rows over the primitive generators

  std::size_t free_primitives() const;
  bool is_trivial() const { return group_part.is_trivial() && free_primitives() == 0; }
  std::string to_string() const;
};

/// Quotient of p by relations of the forms c (M1 - M2) with Laurent
/// monomials, or (invertible monomial) x (linear combination of primitive
/// generators). Skew-primitives are first rewritten as Y = T^λ X. Throws
/// UnsupportedRelation on anything else.
HomologyDescriptor quotient_by_relations(const PresentedCommHopf& p, const std::vector<Element>& relations);

/// Structure of the character group Alg(k[A] ⊗ k[X]/rel, Q):
/// Hom(A, Q^×) = {±1}^sign_factors × (Q^×)^free_rank, times an affine space.
struct CharacterReport {
  std::size_t sign_factors = 0;
  std::size_t free_rank = 0;
  std::size_t affine_dim = 0;

  bool is_trivial() const { return sign_factors == 0 && free_rank == 0 && affine_dim == 0; }
  std::string to_string() const;
};

CharacterReport character_group_descriptor(const HomologyDescriptor& d);

}  // namespace lazyhom
