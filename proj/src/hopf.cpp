#include "lazyhom/hopf.hpp"

#include <array>
#include <map>

namespace lazyhom {

namespace {

template <typename Key>
using SparseSum = std::map<Key, Rational>;

template <typename Key>
void prune(SparseSum<Key>& s) {
  for (auto it = s.begin(); it != s.end();) it = is_zero(it->second) ? s.erase(it) : std::next(it);
}

template <typename Key>
bool same(SparseSum<Key> a, SparseSum<Key> b) {
  prune(a);
  prune(b);
  return a == b;
}

std::vector<Term> sparse_of(const QVector& v) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) out.push_back({k, v[k]});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

FinDimCoalgebra::FinDimCoalgebra(std::vector<std::string> labels, Tensor3 comult, QVector counit)
    : labels_(std::move(labels)), comult_(std::move(comult)), counit_(std::move(counit)) {
  const std::size_t n = labels_.size();
  if (comult_.extent() != n || counit_.size() != n)
    throw DimensionMismatch("hopf-core", "coalgebra tensors do not match the basis size " + std::to_string(n));
  coproduct_terms_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!is_zero(comult_(i, a, b))) coproduct_terms_[i].push_back({a, b, comult_(i, a, b)});
}

QVector FinDimCoalgebra::coproduct(const QVector& x) const {
  const std::size_t n = dim();
  QVector out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (const auto& t : coproduct_terms_[i]) out[t.a * n + t.b] += x[i] * t.c;
  }
  return out;
}

Rational FinDimCoalgebra::counit_of(const QVector& x) const {
  Rational s;
  for (std::size_t i = 0; i < dim(); ++i) s += x[i] * counit_[i];
  return s;
}

bool FinDimCoalgebra::is_cocommutative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (comult_(i, a, b) != comult_(i, b, a)) return false;
  return true;
}

FinDimHopf::FinDimHopf(std::string name, std::vector<std::string> labels, Tensor3 mult, QVector unit, Tensor3 comult,
                       QVector counit, QMatrix antipode)
    : FinDimCoalgebra(std::move(labels), std::move(comult), std::move(counit)),
      name_(std::move(name)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = dim();
  if (mult_.extent() != n || unit_.size() != n || antipode_.rows() != n || antipode_.cols() != n)
    throw DimensionMismatch("hopf-core", "algebra tensors of '" + name_ + "' do not match the basis size " + std::to_string(n));
  product_terms_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(mult_(i, j, k))) product_terms_[i * n + j].push_back({k, mult_(i, j, k)});
}

QVector FinDimHopf::multiply(const QVector& a, const QVector& b) const {
  const std::size_t n = dim();
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      Rational f = a[i] * b[j];
      for (const auto& t : product_terms(i, j)) out[t.k] += f * t.c;
    }
  }
  return out;
}

QVector FinDimHopf::basis_product(std::size_t i, std::size_t j) const {
  QVector out(dim());
  for (const auto& t : product_terms(i, j)) out[t.k] = t.c;
  return out;
}

bool FinDimHopf::is_commutative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mult_(i, j, k) != mult_(j, i, k)) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool HopfReport::all_passed() const { return first_failure() == nullptr; }

const AxiomCheck* HopfReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

AxiomCheck check_coassoc(const FinDimCoalgebra& c) {
  AxiomCheck out{"coassoc", true, {}};
  using K = std::array<std::size_t, 3>;
  for (std::size_t i = 0; i < c.dim() && out.passed; ++i) {
    SparseSum<K> left, right;
    for (const auto& t : c.coproduct_terms(i)) {
      for (const auto& u : c.coproduct_terms(t.a)) left[{u.a, u.b, t.b}] += t.c * u.c;
      for (const auto& u : c.coproduct_terms(t.b)) right[{t.a, u.a, u.b}] += t.c * u.c;
    }
    if (!same(left, right)) out = {"coassoc", false, c.labels()[i]};
  }
  return out;
}

AxiomCheck check_counit(const FinDimCoalgebra& c) {
  AxiomCheck out{"counit", true, {}};
  for (std::size_t i = 0; i < c.dim() && out.passed; ++i) {
    QVector left(c.dim()), right(c.dim());
    for (const auto& t : c.coproduct_terms(i)) {
      left[t.b] += c.counit()[t.a] * t.c;
      right[t.a] += c.counit()[t.b] * t.c;
    }
    QVector e = unit_vector(c.dim(), i);
    if (left != e || right != e) out = {"counit", false, c.labels()[i]};
  }
  return out;
}

}  // namespace

HopfReport verify_coalgebra(const FinDimCoalgebra& c) { return HopfReport{{check_coassoc(c), check_counit(c)}}; }

HopfReport verify_hopf(const FinDimHopf& h) {
  const std::size_t n = h.dim();
  const auto& L = h.labels();
  HopfReport report;

  AxiomCheck assoc{"assoc", true, {}};
  for (std::size_t i = 0; i < n && assoc.passed; ++i)
    for (std::size_t j = 0; j < n && assoc.passed; ++j)
      for (std::size_t k = 0; k < n && assoc.passed; ++k) {
        SparseSum<std::size_t> left, right;
        for (const auto& t : h.product_terms(i, j))
          for (const auto& u : h.product_terms(t.k, k)) left[u.k] += t.c * u.c;
        for (const auto& t : h.product_terms(j, k))
          for (const auto& u : h.product_terms(i, t.k)) right[u.k] += t.c * u.c;
        if (!same(left, right)) assoc = {"assoc", false, "(" + L[i] + ", " + L[j] + ", " + L[k] + ")"};
      }
  report.checks.push_back(assoc);

  AxiomCheck unit{"unit", true, {}};
  auto one = sparse_of(h.unit());
  for (std::size_t i = 0; i < n && unit.passed; ++i) {
    SparseSum<std::size_t> left, right, expect{{i, Rational(1)}};
    for (const auto& u : one) {
      for (const auto& t : h.product_terms(u.k, i)) left[t.k] += u.c * t.c;
      for (const auto& t : h.product_terms(i, u.k)) right[t.k] += u.c * t.c;
    }
    if (!same(left, expect) || !same(right, expect)) unit = {"unit", false, L[i]};
  }
  report.checks.push_back(unit);

  report.checks.push_back(check_coassoc(h));
  report.checks.push_back(check_counit(h));

  // Delta and epsilon are unital algebra maps.
  AxiomCheck bialg{"bialgebra", true, {}};
  using K2 = std::pair<std::size_t, std::size_t>;
  {
    SparseSum<K2> d1, expect;
    for (const auto& u : one)
      for (const auto& t : h.coproduct_terms(u.k)) d1[{t.a, t.b}] += u.c * t.c;
    for (const auto& u : one)
      for (const auto& v : one) expect[{u.k, v.k}] += u.c * v.c;
    if (!same(d1, expect) || h.counit_of(h.unit()) != 1) bialg = {"bialgebra", false, "unit"};
  }
  for (std::size_t i = 0; i < n && bialg.passed; ++i)
    for (std::size_t j = 0; j < n && bialg.passed; ++j) {
      SparseSum<K2> left, right;
      Rational eps_prod;
      for (const auto& t : h.product_terms(i, j)) {
        eps_prod += t.c * h.counit()[t.k];
        for (const auto& u : h.coproduct_terms(t.k)) left[{u.a, u.b}] += t.c * u.c;
      }
      for (const auto& p : h.coproduct_terms(i))
        for (const auto& q : h.coproduct_terms(j))
          for (const auto& x : h.product_terms(p.a, q.a))
            for (const auto& y : h.product_terms(p.b, q.b)) right[{x.k, y.k}] += p.c * q.c * x.c * y.c;
      if (!same(left, right) || eps_prod != h.counit()[i] * h.counit()[j])
        bialg = {"bialgebra", false, "(" + L[i] + ", " + L[j] + ")"};
    }
  report.checks.push_back(bialg);

  AxiomCheck anti{"antipode", true, {}};
  std::vector<std::vector<Term>> s_cols(n);
  for (std::size_t i = 0; i < n; ++i) s_cols[i] = sparse_of(h.antipode().col(i));
  for (std::size_t i = 0; i < n && anti.passed; ++i) {
    SparseSum<std::size_t> left, right, expect;
    for (const auto& u : one) expect[u.k] += h.counit()[i] * u.c;
    for (const auto& t : h.coproduct_terms(i)) {
      for (const auto& s : s_cols[t.a])
        for (const auto& p : h.product_terms(s.k, t.b)) left[p.k] += t.c * s.c * p.c;
      for (const auto& s : s_cols[t.b])
        for (const auto& p : h.product_terms(t.a, s.k)) right[p.k] += t.c * s.c * p.c;
    }
    if (!same(left, expect) || !same(right, expect)) anti = {"antipode", false, L[i]};
  }
  report.checks.push_back(anti);
  return report;
}

}  // namespace lazyhom
