#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace octo {

using BigInt = mpz_class;

/// Dense row-major integer matrix with exact big-integer entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// S = U * M * V with U, V unimodular and S diagonal, each nonzero diagonal
/// entry positive and dividing the next.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  std::size_t rank() const;
  /// Nonzero diagonal entries of S in order.
  std::vector<BigInt> invariant_factors() const;
};

/// Pivots on the entry of minimal nonzero absolute value. Throws
/// Inconsistency if the result fails its own postconditions.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace octo
