#include "lazyhom/oracles.hpp"

#include "lazyhom/linalg.hpp"

#include <algorithm>

namespace lazyhom {

FiniteGroup group_center(const FiniteGroup& g) {
  std::vector<std::size_t> members;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) members.push_back(a);
  }
  const std::size_t k = members.size();
  std::vector<std::string> labels;
  std::vector<std::size_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(g.labels()[members[i]]);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t p = g.mul(members[i], members[j]);
      table[i * k + j] = static_cast<std::size_t>(std::find(members.begin(), members.end(), p) - members.begin());
    }
  }
  return FiniteGroup("Z(" + g.name() + ")", std::move(labels), std::move(table));
}

FPAbelianGroup group_abelianization(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<ZVector> rels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ZVector r(n);
      r[a] += 1;
      r[b] += 1;
      r[g.mul(a, b)] -= 1;
      rels.push_back(std::move(r));
    }
  return fp_abelian_group(n, rels, g.labels());
}

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Column `col` of ∂_n: the faces of the tuple encoded by col.
void bar_column(const FiniteGroup& g, unsigned n, std::size_t col, ZMatrix& out) {
  const std::size_t q = g.order();
  std::vector<std::size_t> t(n);
  for (unsigned i = n; i-- > 0;) {
    t[i] = col % q;
    col /= q;
  }
  const std::size_t column = [&] {
    std::size_t c = 0;
    for (auto v : t) c = c * q + v;
    return c;
  }();
  auto encode = [&](const std::vector<std::size_t>& s) {
    std::size_t c = 0;
    for (auto v : s) c = c * q + v;
    return c;
  };
  for (unsigned i = 0; i <= n; ++i) {
    std::vector<std::size_t> face;
    if (i == 0) {
      face.assign(t.begin() + 1, t.end());
    } else if (i == n) {
      face.assign(t.begin(), t.end() - 1);
    } else {
      face.assign(t.begin(), t.begin() + (i - 1));
      face.push_back(g.mul(t[i - 1], t[i]));
      face.insert(face.end(), t.begin() + (i + 1), t.end());
    }
    out(encode(face), column) += (i % 2 == 0) ? 1 : -1;
  }
}

}  // namespace

ZMatrix bar_boundary_serial(const FiniteGroup& g, unsigned n) {
  if (n == 0) return ZMatrix(0, 1);
  const std::size_t q = g.order();
  ZMatrix d(ipow(q, n - 1), ipow(q, n));
  for (std::size_t col = 0; col < d.cols(); ++col) bar_column(g, n, col, d);
  return d;
}

ZMatrix bar_boundary_parallel(const FiniteGroup& g, unsigned n) {
  if (n == 0) return ZMatrix(0, 1);
  const std::size_t q = g.order();
  ZMatrix d(ipow(q, n - 1), ipow(q, n));
  const auto cols = static_cast<std::int64_t>(d.cols());
  // Each column is written by exactly one iteration.
#pragma omp parallel for schedule(static)
  for (std::int64_t col = 0; col < cols; ++col) bar_column(g, n, static_cast<std::size_t>(col), d);
  return d;
}

FPAbelianGroup bar_homology(const FiniteGroup& g, unsigned degree, std::size_t max_order, bool parallel) {
  if (degree != 1 && degree != 2) throw UsageError("bar homology is implemented in degrees 1 and 2");
  if (g.order() > max_order)
    throw UsageError("group of order " + std::to_string(g.order()) + " exceeds the bar-homology bound " +
                     std::to_string(max_order));
  auto boundary = [&](unsigned n) { return parallel ? bar_boundary_parallel(g, n) : bar_boundary_serial(g, n); };
  const ZMatrix dn = boundary(degree), dn1 = boundary(degree + 1);
  const std::size_t rank_n = rank(to_rational(dn));
  const Smith s = smith_normal_form(dn1);
  std::vector<Integer> factors;
  std::size_t rank_n1 = 0;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    if (sgn(s.d(i, i)) != 0) {
      ++rank_n1;
      if (s.d(i, i) != 1) factors.push_back(s.d(i, i));
    }
  const std::size_t free = dn.cols() - rank_n - rank_n1;
  for (std::size_t i = 0; i < free; ++i) factors.push_back(0);
  return abelian_group_from_factors(std::move(factors));
}

void FusionRing::validate() const {
  const std::size_t n = labels.size();
  if (unit >= n) throw UsageError("fusion unit label is out of range");
  std::vector<unsigned long> left(n * n, 0), right(n * n, 0);
  for (const auto& e : mult) {
    if (e.lambda >= n || e.mu >= n || e.nu >= n) throw UsageError("fusion entry refers to an unknown label");
    if (e.multiplicity == 0) throw UsageError("fusion multiplicities must be positive");
    if (e.lambda == unit) left[e.mu * n + e.nu] += e.multiplicity;
    if (e.mu == unit) right[e.lambda * n + e.nu] += e.multiplicity;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const unsigned long expect = a == b ? 1 : 0;
      if (left[a * n + b] != expect || right[a * n + b] != expect)
        throw UsageError("fusion ring violates the unit law at label " + labels[a]);
    }
}

FPAbelianGroup fusion_grading(const FusionRing& f) {
  f.validate();
  const std::size_t n = f.labels.size();
  std::vector<ZVector> rels;
  for (const auto& e : f.mult) {
    ZVector r(n);
    r[e.lambda] += 1;
    r[e.mu] += 1;
    r[e.nu] -= 1;
    rels.push_back(std::move(r));
  }
  return fp_abelian_group(n, rels, f.labels);
}

FusionRing pointed_fusion(const FiniteGroup& g) {
  FusionRing f{g.labels(), g.identity(), {}};
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) f.mult.push_back({a, b, g.mul(a, b), 1});
  return f;
}

}  // namespace lazyhom
