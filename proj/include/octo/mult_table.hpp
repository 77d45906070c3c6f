#pragma once

#include <cstddef>
#include <vector>

namespace octo {

inline constexpr int kMaxTableLevel = 6;

/// e_i * e_j = sign * e_index
struct TableEntry {
  int sign = 1;
  std::size_t index = 0;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

class MultiplicationTable {
 public:
  MultiplicationTable(int level, std::vector<TableEntry> entries);

  int level() const { return level_; }
  std::size_t dim() const { return dim_; }
  const TableEntry& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Every row and every column hits each basis index exactly once.
  bool is_signed_permutation() const;

 private:
  int level_;
  std::size_t dim_;
  std::vector<TableEntry> entries_;
};

/// Closure of the doubling product on basis elements. Throws ResourceGuard
/// above kMaxTableLevel and Inconsistency if a product is not a signed
/// basis element.
MultiplicationTable build_table(int level);

}  // namespace octo
