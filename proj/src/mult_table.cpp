#include "octo/mult_table.hpp"

#include <cstdint>
#include <string>

#include "octo/cd_number.hpp"
#include "octo/errors.hpp"

namespace octo {

MultiplicationTable::MultiplicationTable(int level, std::vector<TableEntry> entries)
    : level_(level), dim_(std::size_t{1} << level), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw ContractViolation("MultiplicationTable: wrong entry count");
}

bool MultiplicationTable::is_signed_permutation() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<bool> row_seen(dim_, false), col_seen(dim_, false);
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto r = at(i, j).index;
      const auto c = at(j, i).index;
      if (row_seen[r] || col_seen[c]) return false;
      row_seen[r] = col_seen[c] = true;
    }
  }
  return true;
}

MultiplicationTable build_table(int level) {
  if (level < 0) throw ContractViolation("build_table: negative level");
  if (level > kMaxTableLevel) {
    throw ResourceGuard("build_table: level " + std::to_string(level) + " exceeds cap " +
                        std::to_string(kMaxTableLevel));
  }
  using I = std::int64_t;
  const std::size_t n = std::size_t{1} << level;
  std::vector<CDNumber<I>> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(basis_element<I>(level, i));

  std::vector<TableEntry> entries(n * n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < n; ++j) {
      const CDNumber<I> p = cd_mul(basis[i], basis[j]);
      int found = 0;
      TableEntry e;
      for (std::size_t k = 0; k < n; ++k) {
        if (p[k] == 0) continue;
        ++found;
        e = {static_cast<int>(p[k]), k};
        if (p[k] != 1 && p[k] != -1) found = 2;
      }
      // Cannot throw out of an OpenMP region; flag and report below.
      entries[i * n + j] = found == 1 ? e : TableEntry{0, 0};
    }
  }
  for (const auto& e : entries) {
    if (e.sign == 0) throw Inconsistency("build_table: basis product is not a signed basis element");
  }
  return MultiplicationTable(level, std::move(entries));
}

}  // namespace octo
