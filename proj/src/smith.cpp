#include "octo/smith.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "octo/errors.hpp"

namespace octo {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractViolation("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return sgn(v) == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractViolation("IntMatrix: shape mismatch in product");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return abs(determinant(m)) == 1;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

std::vector<BigInt> SmithForm::invariant_factors() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) {
    if (sgn(S(i, i)) != 0) d.push_back(S(i, i));
  }
  return d;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : s_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(s_.rows(), s_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      const auto pivot = min_nonzero(t, t, s_.rows(), s_.cols());
      if (!pivot) break;
      move_to(t, pivot->first, pivot->second);
      reduce_at(t);
      if (sgn(s_(t, t)) < 0) negate_row(t);
    }
    return {std::move(s_), std::move(u_), std::move(v_)};
  }

 private:
  // Minimal |entry| over rows [r0, r1) x cols [c0, c1).
  std::optional<std::pair<std::size_t, std::size_t>> min_nonzero(std::size_t r0, std::size_t c0, std::size_t r1,
                                                                 std::size_t c1) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        if (sgn(s_(i, j)) == 0) continue;
        BigInt a = abs(s_(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    }
    return best;
  }

  void move_to(std::size_t t, std::size_t i, std::size_t j) {
    swap_rows(t, i);
    swap_cols(t, j);
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s_.rows(); ++i) {
        if (sgn(s_(i, t)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s_(i, t).get_mpz_t(), s_(t, t).get_mpz_t());
        add_row_multiple(i, t, -q);
        if (sgn(s_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (sgn(s_(t, j)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s_(t, j).get_mpz_t(), s_(t, t).get_mpz_t());
        add_col_multiple(j, t, -q);
        if (sgn(s_(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived in row or column t.
        auto in_col = min_nonzero(t, t, s_.rows(), t + 1);
        auto in_row = min_nonzero(t, t, t + 1, s_.cols());
        auto pick = in_col;
        if (!pick || (in_row && abs(s_(in_row->first, in_row->second)) < abs(s_(in_col->first, in_col->second)))) {
          pick = in_row;
        }
        move_to(t, pick->first, pick->second);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < s_.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < s_.cols(); ++j) {
          if (!mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < s_.cols(); ++c) std::swap(s_(a, c), s_(b, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < s_.rows(); ++r) std::swap(s_(r, a), s_(r, b));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
  }
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t c = 0; c < s_.cols(); ++c) s_(dst, c) += k * s_(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += k * u_(src, c);
  }
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t r = 0; r < s_.rows(); ++r) s_(r, dst) += k * s_(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += k * v_(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < s_.cols(); ++c) s_(r, c) = -s_(r, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(r, c) = -u_(r, c);
  }

  IntMatrix s_, u_, v_;
};

void verify(const IntMatrix& m, const SmithForm& f) {
  if (!(f.U * m * f.V == f.S)) throw Inconsistency("smith_normal_form: S != U M V");
  if (!is_unimodular(f.U) || !is_unimodular(f.V)) throw Inconsistency("smith_normal_form: transform not unimodular");
  const auto d = f.invariant_factors();
  for (std::size_t i = 0; i < f.S.rows(); ++i) {
    for (std::size_t j = 0; j < f.S.cols(); ++j) {
      if (i != j && sgn(f.S(i, j)) != 0) throw Inconsistency("smith_normal_form: S is not diagonal");
    }
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) <= 0 || sgn(f.S(i, i)) == 0) throw Inconsistency("smith_normal_form: bad diagonal");
    if (i + 1 < d.size() && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) {
      throw Inconsistency("smith_normal_form: divisibility chain broken");
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f = Reducer(m).run();
  verify(m, f);
  return f;
}

}  // namespace octo
