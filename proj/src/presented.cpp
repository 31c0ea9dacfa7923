#include "lazyhom/presented.hpp"

#include "lazyhom/linalg.hpp"

#include <numeric>
#include <sstream>

namespace lazyhom {

namespace {

constexpr const char* kModule = "presented-hopf";

}  // namespace

// ---------------------------------------------------------------------------
// Monomials and elements

bool Monomial::is_laurent() const { return degree() == 0; }

unsigned Monomial::degree() const { return std::accumulate(poly.begin(), poly.end(), 0u); }

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.laurent.size(); ++i) out.laurent[i] += b.laurent[i];
  for (std::size_t j = 0; j < out.poly.size(); ++j) out.poly[j] += b.poly[j];
  return out;
}

void Element::add(const Monomial& m, const Rational& c) {
  if (lazyhom::is_zero(c)) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (lazyhom::is_zero(it->second)) terms.erase(it);
  }
}

Element operator+(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [m, c] : b.terms) out.add(m, c);
  return out;
}

Element operator-(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [m, c] : b.terms) out.add(m, -c);
  return out;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [m, c] : a.terms)
    for (const auto& [n, d] : b.terms) out.add(m * n, c * d);
  return out;
}

Element operator*(const Rational& c, const Element& a) {
  Element out;
  for (const auto& [m, d] : a.terms) out.add(m, c * d);
  return out;
}

void TensorElement::add(const Monomial& a, const Monomial& b, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [m, c] : a.terms)
    for (const auto& [n, d] : b.terms) out.add(m.first * n.first, m.second * n.second, c * d);
  return out;
}

TensorElement tensor(const Element& a, const Element& b) {
  TensorElement out;
  for (const auto& [m, c] : a.terms)
    for (const auto& [n, d] : b.terms) out.add(m, n, c * d);
  return out;
}

// ---------------------------------------------------------------------------
// PresentedCommHopf

PresentedCommHopf::PresentedCommHopf(std::vector<std::string> laurent_names, std::vector<std::string> poly_names,
                                     std::vector<std::vector<std::int64_t>> poly_weights)
    : laurent_names_(std::move(laurent_names)), poly_names_(std::move(poly_names)), poly_weights_(std::move(poly_weights)) {
  if (poly_weights_.size() != poly_names_.size())
    throw DimensionMismatch(kModule, "one grouplike weight is needed per polynomial generator");
  for (const auto& w : poly_weights_)
    if (w.size() != laurent_names_.size()) throw DimensionMismatch(kModule, "weight length differs from the Laurent rank");
}

Monomial PresentedCommHopf::unit_monomial() const {
  return Monomial{std::vector<std::int64_t>(num_laurent(), 0), std::vector<std::uint32_t>(num_poly(), 0)};
}

Element PresentedCommHopf::one() const {
  Element e;
  e.add(unit_monomial(), 1);
  return e;
}

Element PresentedCommHopf::laurent(std::size_t i, std::int64_t exponent) const {
  Monomial m = unit_monomial();
  m.laurent.at(i) = exponent;
  Element e;
  e.add(m, 1);
  return e;
}

Element PresentedCommHopf::laurent_monomial(const std::vector<std::int64_t>& exponents) const {
  if (exponents.size() != num_laurent()) throw DimensionMismatch(kModule, "exponent vector length differs from the Laurent rank");
  Monomial m = unit_monomial();
  m.laurent = exponents;
  Element e;
  e.add(m, 1);
  return e;
}

Element PresentedCommHopf::poly(std::size_t j) const {
  Monomial m = unit_monomial();
  m.poly.at(j) = 1;
  Element e;
  e.add(m, 1);
  return e;
}

Rational PresentedCommHopf::counit(const Element& a) const {
  Rational s;
  for (const auto& [m, c] : a.terms)
    if (m.is_laurent()) s += c;
  return s;
}

TensorElement PresentedCommHopf::coproduct(const Element& a) const {
  TensorElement out;
  for (const auto& [m, c] : a.terms) {
    Monomial base = unit_monomial();
    base.laurent = m.laurent;
    TensorElement acc;
    acc.add(base, base, c);
    for (std::size_t j = 0; j < num_poly(); ++j) {
      if (m.poly[j] == 0) continue;
      Monomial g = unit_monomial(), y = unit_monomial();
      g.laurent = poly_weights_[j];
      y.poly[j] = 1;
      TensorElement dy;
      dy.add(g, y, 1);
      dy.add(y, g, 1);
      for (std::uint32_t k = 0; k < m.poly[j]; ++k) acc = acc * dy;
    }
    for (const auto& [pair, d] : acc.terms) out.add(pair.first, pair.second, d);
  }
  return out;
}

Element PresentedCommHopf::antipode(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms) {
    Monomial s = m;
    for (auto& e : s.laurent) e = -e;
    unsigned deg = 0;
    for (std::size_t j = 0; j < num_poly(); ++j) {
      deg += m.poly[j];
      for (std::size_t i = 0; i < num_laurent(); ++i)
        s.laurent[i] -= 2 * static_cast<std::int64_t>(m.poly[j]) * poly_weights_[j][i];
    }
    out.add(s, deg % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

std::string PresentedCommHopf::to_string(const Monomial& m) const {
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < num_laurent(); ++i)
    if (m.laurent[i] != 0)
      factors.push_back(laurent_names_[i] + (m.laurent[i] == 1 ? "" : "^" + std::to_string(m.laurent[i])));
  for (std::size_t j = 0; j < num_poly(); ++j)
    if (m.poly[j] != 0) factors.push_back(poly_names_[j] + (m.poly[j] == 1 ? "" : "^" + std::to_string(m.poly[j])));
  if (factors.empty()) return "1";
  std::string out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) out += "*" + factors[k];
  return out;
}

std::string PresentedCommHopf::to_string(const Element& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms) {
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const std::string mono = to_string(m);
    if (mono == "1")
      os << format_rational(mag);
    else if (mag == 1)
      os << mono;
    else
      os << format_rational(mag) << "*" << mono;
  }
  return os.str();
}

bool antipode_axiom_holds(const PresentedCommHopf& p, const Element& a) {
  const TensorElement d = p.coproduct(a);
  Element left, right;
  for (const auto& [pair, c] : d.terms) {
    Element x, y;
    x.add(pair.first, 1);
    y.add(pair.second, 1);
    left = left + c * (p.antipode(x) * y);
    right = right + c * (x * p.antipode(y));
  }
  const Element expect = p.counit(a) * p.one();
  return left == expect && right == expect;
}

// ---------------------------------------------------------------------------
// Free commutative Hopf algebra on a pointed coalgebra

Element FreeCommHopf::t(const QVector& x) const {
  Element out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) out = out + x[i] * t_basis[i];
  return out;
}

Element FreeCommHopf::t_inv(const QVector& x) const {
  Element out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) out = out + x[i] * t_inv_basis[i];
  return out;
}

FreeCommHopf free_commutative_hopf(const PointedCoalgebra& c, Checks& checks) {
  if (!c.mixed_pairs.empty())
    throw UnsupportedShape(kModule, "skew-primitives over pairs of distinct grouplikes are not supported");
  const std::size_t ng = c.grouplikes.size(), ns = c.skew_primitives.size(), n = c.underlying.dim();

  std::vector<std::string> lnames, pnames;
  for (std::size_t i = 0; i < ng; ++i) lnames.push_back(ng == 1 ? "T" : "T" + std::to_string(i + 1));
  std::vector<std::vector<std::int64_t>> weights;
  for (std::size_t j = 0; j < ns; ++j) {
    pnames.push_back("Y" + std::to_string(j + 1));
    std::vector<std::int64_t> w(ng, 0);
    w[c.skew_primitives[j].grouplike] = 1;
    weights.push_back(std::move(w));
  }
  FreeCommHopf out{PresentedCommHopf(std::move(lnames), std::move(pnames), std::move(weights)), c, {}, {}};
  const PresentedCommHopf& p = out.algebra;

  std::vector<Element> gen_t, gen_tinv;
  for (std::size_t i = 0; i < ng; ++i) {
    gen_t.push_back(p.laurent(i));
    gen_tinv.push_back(p.laurent(i, -1));
  }
  for (std::size_t j = 0; j < ns; ++j) {
    gen_t.push_back(p.poly(j));
    gen_tinv.push_back(Rational(-1) * (p.laurent(c.skew_primitives[j].grouplike, -2) * p.poly(j)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Element t, ti;
    for (std::size_t k = 0; k < ng + ns; ++k) {
      const Rational& w = c.coordinates(k, i);
      if (is_zero(w)) continue;
      t = t + w * gen_t[k];
      ti = ti + w * gen_tinv[k];
    }
    out.t_basis.push_back(std::move(t));
    out.t_inv_basis.push_back(std::move(ti));
  }

  if (checks.enabled()) {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < n && ok; ++x) {
      Element left, right;
      for (const auto& term : c.underlying.coproduct_terms(x)) {
        left = left + term.c * (out.t_basis[term.a] * out.t_inv_basis[term.b]);
        right = right + term.c * (out.t_inv_basis[term.a] * out.t_basis[term.b]);
      }
      const Element expect = c.underlying.counit()[x] * p.one();
      ok = left == expect && right == expect;
      if (!ok) witness = c.underlying.labels()[x];
    }
    checks.record(kModule, "t*t^-1 = ε on " + std::to_string(n) + " basis elements", ok, witness);
    bool gens_ok = true;
    for (std::size_t k = 0; k < ng + ns; ++k) gens_ok = gens_ok && antipode_axiom_holds(p, gen_t[k]);
    for (std::size_t i = 0; i < ng; ++i) gens_ok = gens_ok && p.antipode(p.antipode(gen_t[i])) == gen_t[i];
    checks.record(kModule, "F(C) antipode on generators", gens_ok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms

PresentedMorphism::PresentedMorphism(PresentedCommHopf source, PresentedCommHopf target, std::vector<Element> laurent_images,
                                     std::vector<Element> poly_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      laurent_images_(std::move(laurent_images)),
      poly_images_(std::move(poly_images)) {
  if (laurent_images_.size() != source_.num_laurent() || poly_images_.size() != source_.num_poly())
    throw DimensionMismatch(kModule, "one image is needed per source generator");
  for (std::size_t i = 0; i < laurent_images_.size(); ++i) {
    const Element& img = laurent_images_[i];
    if (img.terms.size() != 1 || !img.terms.begin()->first.is_laurent())
      throw UnsupportedShape(kModule, "image of " + source_.laurent_names()[i] + " is " + target_.to_string(img) +
                                          ", not an invertible monomial");
    Monomial inv = img.terms.begin()->first;
    for (auto& e : inv.laurent) e = -e;
    Element e;
    e.add(inv, 1 / img.terms.begin()->second);
    laurent_inverses_.push_back(std::move(e));
  }
}

Element PresentedMorphism::apply(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms) {
    Element img = target_.one();
    for (std::size_t i = 0; i < m.laurent.size(); ++i) {
      const Element& base = m.laurent[i] >= 0 ? laurent_images_[i] : laurent_inverses_[i];
      for (std::int64_t k = 0; k < (m.laurent[i] >= 0 ? m.laurent[i] : -m.laurent[i]); ++k) img = img * base;
    }
    for (std::size_t j = 0; j < m.poly.size(); ++j)
      for (std::uint32_t k = 0; k < m.poly[j]; ++k) img = img * poly_images_[j];
    out = out + c * img;
  }
  return out;
}

TensorElement PresentedMorphism::apply_left(const TensorElement& t) const {
  TensorElement out;
  for (const auto& [pair, c] : t.terms) {
    Element x;
    x.add(pair.first, 1);
    for (const auto& [m, d] : apply(x).terms) out.add(m, pair.second, c * d);
  }
  return out;
}

TensorElement PresentedMorphism::apply_right(const TensorElement& t) const {
  TensorElement out;
  for (const auto& [pair, c] : t.terms) {
    Element y;
    y.add(pair.second, 1);
    for (const auto& [m, d] : apply(y).terms) out.add(pair.first, m, c * d);
  }
  return out;
}

bool PresentedMorphism::is_hopf_morphism() const {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < source_.num_laurent(); ++i) gens.push_back(source_.laurent(i));
  for (std::size_t j = 0; j < source_.num_poly(); ++j) gens.push_back(source_.poly(j));
  for (const auto& g : gens) {
    const Element fg = apply(g);
    if (target_.counit(fg) != source_.counit(g)) return false;
    if (target_.antipode(fg) != apply(source_.antipode(g))) return false;
    if (target_.coproduct(fg) != apply_right(apply_left(source_.coproduct(g)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hopf kernel

bool in_hopf_kernel(const PresentedMorphism& f, const Element& a) {
  const TensorElement d = f.source().coproduct(a);
  TensorElement expect_left, expect_right;
  const Monomial one_t = f.target().unit_monomial();
  for (const auto& [m, c] : a.terms) {
    expect_left.add(one_t, m, c);
    expect_right.add(m, one_t, c);
  }
  return f.apply_left(d) == expect_left && f.apply_right(d) == expect_right;
}

Element HopfKernel::include(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms) {
    std::vector<std::int64_t> e(source.num_laurent(), 0);
    for (std::size_t r = 0; r < m.laurent.size(); ++r)
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.laurent[r] * lattice(r, i).get_si();
    Element img = c * source.laurent_monomial(e);
    for (std::size_t j = 0; j < m.poly.size(); ++j)
      for (std::uint32_t k = 0; k < m.poly[j]; ++k) img = img * poly_inclusion[j];
    out = out + img;
  }
  return out;
}

std::optional<Element> HopfKernel::rewrite(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms) {
    ZVector ell(m.laurent.size());
    for (std::size_t i = 0; i < ell.size(); ++i) {
      Integer v = static_cast<long>(m.laurent[i]);
      for (std::size_t j = 0; j < m.poly.size(); ++j)
        v += static_cast<long>(m.poly[j]) * static_cast<long>(source.weight(j)[i]);
      ell[i] = v;
    }
    auto coords = lattice_coordinates(lattice, ell);
    if (!coords) return std::nullopt;
    Monomial km = algebra.unit_monomial();
    for (std::size_t r = 0; r < coords->size(); ++r) km.laurent[r] = (*coords)[r].get_si();
    km.poly = m.poly;
    out.add(km, c);
  }
  return out;
}

HopfKernel hopf_kernel(const PresentedMorphism& f, Checks& checks) {
  const PresentedCommHopf& src = f.source();
  const PresentedCommHopf& tgt = f.target();
  if (tgt.num_poly() != 0)
    throw UnsupportedShape(kModule, "Hopf kernel needs a purely Laurent target; target has " + std::to_string(tgt.num_poly()) +
                                        " polynomial generators");
  for (std::size_t j = 0; j < src.num_poly(); ++j)
    if (!f.poly_images()[j].is_zero())
      throw UnsupportedShape(kModule, "Hopf kernel needs every polynomial generator to map to 0; " + src.poly_names()[j] +
                                          " maps to " + tgt.to_string(f.poly_images()[j]));
  ZMatrix map(tgt.num_laurent(), src.num_laurent());
  for (std::size_t i = 0; i < src.num_laurent(); ++i) {
    const auto& [m, c] = *f.laurent_images()[i].terms.begin();
    if (c != 1)
      throw UnsupportedShape(kModule, "image of " + src.laurent_names()[i] + " is not grouplike: " +
                                          tgt.to_string(f.laurent_images()[i]));
    for (std::size_t r = 0; r < tgt.num_laurent(); ++r) map(r, i) = static_cast<long>(m.laurent[r]);
  }
  const std::vector<ZVector> rows = abelian_kernel(map);
  ZMatrix lattice = ZMatrix::from_rows(rows, src.num_laurent());

  std::vector<std::string> knames, xnames;
  for (std::size_t r = 0; r < rows.size(); ++r) knames.push_back("K" + std::to_string(r + 1));
  for (std::size_t j = 0; j < src.num_poly(); ++j) xnames.push_back("X" + std::to_string(j + 1));
  std::vector<std::vector<std::int64_t>> weights(src.num_poly(), std::vector<std::int64_t>(rows.size(), 0));

  HopfKernel out{src, PresentedCommHopf(std::move(knames), std::move(xnames), std::move(weights)), std::move(lattice), {}, {}};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::int64_t> e(src.num_laurent());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = rows[r][i].get_si();
    out.laurent_inclusion.push_back(src.laurent_monomial(e));
  }
  for (std::size_t j = 0; j < src.num_poly(); ++j) {
    std::vector<std::int64_t> e = src.weight(j);
    for (auto& v : e) v = -v;
    out.poly_inclusion.push_back(src.laurent_monomial(e) * src.poly(j));
  }

  if (checks.enabled()) {
    bool ok = true;
    for (const auto& a : out.laurent_inclusion) ok = ok && in_hopf_kernel(f, a);
    for (const auto& a : out.poly_inclusion) ok = ok && in_hopf_kernel(f, a);
    checks.record(kModule, "HKer generators pass the membership test", ok,
                  std::to_string(rows.size()) + " lattice and " + std::to_string(src.num_poly()) + " primitive generators");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotients by relations

std::size_t HomologyDescriptor::free_primitives() const {
  if (primitive_relations.rows() == 0) return primitive_count;
  return primitive_count - rank(primitive_relations);
}

std::string HomologyDescriptor::to_string() const {
  std::vector<std::string> parts;
  if (!group_part.is_trivial()) parts.push_back("k[" + group_part.to_string() + "]");
  const std::size_t m = free_primitives();
  if (m == 1) parts.push_back("k[X]");
  if (m > 1) {
    std::string s = "k[X1";
    for (std::size_t i = 2; i <= m; ++i) s += ",X" + std::to_string(i);
    parts.push_back(s + "]");
  }
  if (parts.empty()) return "k";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊗ " + parts[i];
  return out;
}

namespace {

std::string support_of(const PresentedCommHopf& p, const Element& a) {
  std::string s;
  for (const auto& [m, c] : a.terms) s += (s.empty() ? "" : ", ") + p.to_string(m);
  return "{" + s + "}";
}

}  // namespace

HomologyDescriptor quotient_by_relations(const PresentedCommHopf& p, const std::vector<Element>& relations) {
  // Primitive coordinates: T^l Y^d = T^(l + sum d_j w_j) X^d.
  std::vector<std::string> xnames;
  for (std::size_t j = 0; j < p.num_poly(); ++j) xnames.push_back("X" + std::to_string(j + 1));
  const PresentedCommHopf prim(p.laurent_names(), xnames,
                               std::vector<std::vector<std::int64_t>>(p.num_poly(), std::vector<std::int64_t>(p.num_laurent(), 0)));

  std::vector<ZVector> group_rows;
  std::vector<QVector> linear_rows;
  for (const Element& r : relations) {
    Element a;
    for (const auto& [m, c] : r.terms) {
      Monomial n = m;
      for (std::size_t j = 0; j < p.num_poly(); ++j)
        for (std::size_t i = 0; i < p.num_laurent(); ++i) n.laurent[i] += static_cast<std::int64_t>(m.poly[j]) * p.weight(j)[i];
      a.add(n, c);
    }
    if (a.is_zero()) continue;

    bool all_laurent = true, all_linear = true;
    for (const auto& [m, c] : a.terms) {
      all_laurent = all_laurent && m.is_laurent();
      all_linear = all_linear && m.degree() == 1 && m.laurent == a.terms.begin()->first.laurent;
    }
    if (all_laurent && a.terms.size() == 2 && a.terms.begin()->second == -std::next(a.terms.begin())->second) {
      const auto& m1 = a.terms.begin()->first.laurent;
      const auto& m2 = std::next(a.terms.begin())->first.laurent;
      ZVector row(p.num_laurent());
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = static_cast<long>(m1[i] - m2[i]);
      group_rows.push_back(std::move(row));
    } else if (all_linear) {
      QVector row(p.num_poly());
      for (const auto& [m, c] : a.terms)
        for (std::size_t j = 0; j < p.num_poly(); ++j)
          if (m.poly[j] == 1) row[j] = c;
      linear_rows.push_back(std::move(row));
    } else {
      throw UnsupportedRelation("relation " + prim.to_string(a) + " is neither a difference of Laurent monomials nor a "
                                "monomial multiple of a linear form in primitives; support " + support_of(prim, a));
    }
  }
  HomologyDescriptor d;
  d.group_part = fp_abelian_group(p.num_laurent(), group_rows, p.laurent_names());
  d.primitive_count = p.num_poly();
  d.primitive_relations = QMatrix::from_rows(linear_rows, p.num_poly());
  return d;
}

std::string CharacterReport::to_string() const {
  if (is_trivial()) return "{ε}";
  std::vector<std::string> parts;
  if (sign_factors > 0) parts.push_back(sign_factors == 1 ? "{±1}" : "{±1}^" + std::to_string(sign_factors));
  if (free_rank > 0) parts.push_back(free_rank == 1 ? "Q^×" : "(Q^×)^" + std::to_string(free_rank));
  if (affine_dim > 0) parts.push_back(affine_dim == 1 ? "(Q,+)" : "(Q,+)^" + std::to_string(affine_dim));
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " × " + parts[i];
  return out;
}

CharacterReport character_group_descriptor(const HomologyDescriptor& d) {
  CharacterReport r;
  for (const auto& f : d.group_part.invariant_factors())
    if (sgn(f) != 0 && mpz_even_p(f.get_mpz_t())) ++r.sign_factors;
  r.free_rank = d.group_part.free_rank();
  r.affine_dim = d.free_primitives();
  return r;
}

}  // namespace lazyhom
