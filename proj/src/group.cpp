#include "lazyhom/group.hpp"

#include "lazyhom/errors.hpp"

#include <array>
#include <map>

namespace lazyhom {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<std::size_t> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidGroup("group '" + name_ + "' has no elements");
  if (table_.size() != n * n) throw InvalidGroup("Cayley table of '" + name_ + "' is not " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) >= n) throw InvalidGroup("product " + labels_[a] + "*" + labels_[b] + " is outside the group");

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidGroup("group '" + name_ + "' has no identity element");

  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n) throw InvalidGroup("element " + labels_[a] + " has no inverse");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InvalidGroup("associativity fails on (" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")");
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidGroup("cyclic group of order 0");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i)));
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup("C" + std::to_string(n), std::move(labels), std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a.labels()[i] + "," + b.labels()[j] + ")");
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup(a.name() + "x" + b.name(), std::move(labels), std::move(t));
}

namespace {

// Groups given as permutations; the table is read off by composition.
template <std::size_t Points>
FiniteGroup from_permutations(std::string name, const std::vector<std::pair<std::string, std::array<int, Points>>>& elems) {
  const std::size_t n = elems.size();
  std::map<std::array<int, Points>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[elems[i].second] = i;
  std::vector<std::string> labels;
  std::vector<std::size_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(elems[i].first);
    for (std::size_t j = 0; j < n; ++j) {
      std::array<int, Points> c{};
      // (p*q)(x) = p(q(x))
      for (std::size_t x = 0; x < Points; ++x) c[x] = elems[i].second[static_cast<std::size_t>(elems[j].second[x])];
      auto it = index.find(c);
      if (it == index.end()) throw InvalidGroup("permutation list for '" + name + "' is not closed");
      t[i * n + j] = it->second;
    }
  }
  return FiniteGroup(std::move(name), std::move(labels), std::move(t));
}

}  // namespace

FiniteGroup symmetric_group_3() {
  return from_permutations<3>("S3", {{"1", {0, 1, 2}},
                                     {"(12)", {1, 0, 2}},
                                     {"(13)", {2, 1, 0}},
                                     {"(23)", {0, 2, 1}},
                                     {"(123)", {1, 2, 0}},
                                     {"(132)", {2, 0, 1}}});
}

FiniteGroup dihedral_group_4() {
  // Symmetries of the square with vertices 0..3; r is the rotation, s a reflection.
  return from_permutations<4>("D4", {{"1", {0, 1, 2, 3}},
                                     {"r", {1, 2, 3, 0}},
                                     {"r^2", {2, 3, 0, 1}},
                                     {"r^3", {3, 0, 1, 2}},
                                     {"s", {0, 3, 2, 1}},
                                     {"sr", {3, 2, 1, 0}},
                                     {"sr^2", {2, 1, 0, 3}},
                                     {"sr^3", {1, 0, 3, 2}}});
}

FiniteGroup quaternion_group() {
  // Elements (sign, unit) with unit in {1, i, j, k}; signs multiply and the
  // unit product follows i^2 = j^2 = k^2 = ijk = -1.
  const std::array<std::string, 4> unit = {"1", "i", "j", "k"};
  // prod[u][v] = (sign, unit) of u*v
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const std::size_t res[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::string> labels;
  for (int s : {1, -1})
    for (const auto& u : unit) labels.push_back(s > 0 ? u : "-" + u);
  std::vector<std::size_t> t(64);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      int s = (a < 4 ? 1 : -1) * (b < 4 ? 1 : -1) * sign[a % 4][b % 4];
      t[a * 8 + b] = res[a % 4][b % 4] + (s > 0 ? 0 : 4);
    }
  return FiniteGroup("Q8", std::move(labels), std::move(t));
}

FiniteGroup group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  if (name == "D4") return dihedral_group_4();
  if (name == "Q8") return quaternion_group();
  if (name == "C2xC2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.size() > 1 && name[0] == 'C' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    auto n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 64) return cyclic_group(n);
  }
  throw InvalidGroup("unknown group '" + name + "'");
}

std::vector<std::string> builtin_group_names() { return {"C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8"}; }

}  // namespace lazyhom
