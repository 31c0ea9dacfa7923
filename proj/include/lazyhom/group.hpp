#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lazyhom {

/// A finite group given by its Cayley table. Element 0 need not be the
/// identity; the constructor locates it and checks every group axiom.
class FiniteGroup {
 public:
  /// table[a * n + b] is the index of a*b. Throws InvalidGroup naming the
  /// failing element or triple.
  FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<std::size_t> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const noexcept { return identity_; }
  bool is_abelian() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group_3();
FiniteGroup dihedral_group_4();  // order 8
FiniteGroup quaternion_group();  // Q8

/// C2, C3, C4, C6, C2xC2, S3, D4, Q8 (and Cn for any n >= 1).
FiniteGroup group_by_name(const std::string& name);
std::vector<std::string> builtin_group_names();

}  // namespace lazyhom
