#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "octo/errors.hpp"
#include "octo/scalar.hpp"

namespace octo {

/// Largest level for which a CDNumber may be allocated (2^20 coordinates).
inline constexpr int kMaxConstructibleLevel = 20;

/// Element of the level-n Cayley-Dickson algebra: 2^n coordinates, where
/// coordinate i is the coefficient of basis element e_i. The level-(n+1)
/// element (a, b) stores a in the first half and b in the second half.
template <Scalar S>
class CDNumber {
 public:
  using scalar_type = S;

  CDNumber() : CDNumber(0) {}

  explicit CDNumber(int level) : level_(checked_level(level)), coords_(dim(level), ScalarTraits<S>::zero()) {}

  CDNumber(int level, std::vector<S> coords) : level_(checked_level(level)), coords_(std::move(coords)) {
    if (coords_.size() != dim(level_)) {
      throw ContractViolation("CDNumber: expected " + std::to_string(dim(level_)) + " coordinates, got " +
                              std::to_string(coords_.size()));
    }
  }

  /// s * e_0 at the given level.
  static CDNumber real(int level, S value) {
    CDNumber r(level);
    r.coords_[0] = std::move(value);
    return r;
  }

  /// The level-(n+1) element (a, b).
  static CDNumber from_pair(const CDNumber& a, const CDNumber& b) {
    require_same_level(a, b, "from_pair");
    std::vector<S> c;
    c.reserve(2 * a.size());
    c.insert(c.end(), a.coords_.begin(), a.coords_.end());
    c.insert(c.end(), b.coords_.begin(), b.coords_.end());
    return CDNumber(a.level_ + 1, std::move(c));
  }

  static constexpr std::size_t dim(int level) { return std::size_t{1} << level; }

  int level() const { return level_; }
  std::size_t size() const { return coords_.size(); }
  std::span<const S> coords() const { return coords_; }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  S& operator[](std::size_t i) { return coords_[i]; }
  const S& real_part() const { return coords_[0]; }

  CDNumber first_half() const { return half(0); }
  CDNumber second_half() const { return half(1); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const S& s) { return ScalarTraits<S>::is_zero(s); });
  }

  template <Scalar T>
  CDNumber<T> cast() const {
    std::vector<T> out;
    out.reserve(coords_.size());
    for (const auto& s : coords_) {
      if constexpr (std::is_same_v<T, double>) {
        out.push_back(ScalarTraits<S>::to_double(s));
      } else if constexpr (std::is_same_v<S, Rational> && std::is_integral_v<T>) {
        if (s.get_den() != 1 || !s.get_num().fits_slong_p()) {
          throw ContractViolation("CDNumber::cast: " + s.get_str() + " is not a machine integer");
        }
        out.push_back(static_cast<T>(s.get_num().get_si()));
      } else {
        out.push_back(T(s));
      }
    }
    return CDNumber<T>(level_, std::move(out));
  }

  friend bool operator==(const CDNumber& x, const CDNumber& y) {
    return x.level_ == y.level_ && x.coords_ == y.coords_;
  }

  CDNumber& operator+=(const CDNumber& o) {
    require_same_level(*this, o, "operator+");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  CDNumber& operator-=(const CDNumber& o) {
    require_same_level(*this, o, "operator-");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  CDNumber& operator*=(const S& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend CDNumber operator+(CDNumber x, const CDNumber& y) { return x += y; }
  friend CDNumber operator-(CDNumber x, const CDNumber& y) { return x -= y; }
  friend CDNumber operator*(CDNumber x, const S& s) { return x *= s; }
  friend CDNumber operator*(const S& s, CDNumber x) { return x *= s; }
  friend CDNumber operator-(CDNumber x) {
    for (auto& c : x.coords_) c = -c;
    return x;
  }

  static void require_same_level(const CDNumber& x, const CDNumber& y, const char* what) {
    if (x.level_ != y.level_) {
      throw ContractViolation(std::string(what) + ": level mismatch (" + std::to_string(x.level_) + " vs " +
                              std::to_string(y.level_) + ")");
    }
  }

 private:
  static int checked_level(int level) {
    if (level < 0 || level > kMaxConstructibleLevel) {
      throw ContractViolation("CDNumber: level " + std::to_string(level) + " out of range");
    }
    return level;
  }

  CDNumber half(int which) const {
    if (level_ == 0) throw ContractViolation("CDNumber: level-0 element has no halves");
    const std::size_t h = coords_.size() / 2;
    auto first = coords_.begin() + static_cast<std::ptrdiff_t>(which * h);
    return CDNumber(level_ - 1, std::vector<S>(first, first + static_cast<std::ptrdiff_t>(h)));
  }

  int level_;
  std::vector<S> coords_;
};

namespace detail {

// (a, b)* = (a*, -b), which unwinds to negating every imaginary coordinate.
template <Scalar S>
void conj_into(std::span<const S> x, std::span<S> out) {
  out[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) out[i] = -x[i];
}

// (a, b)(c, d) = (ac - d*b, da + bc*). `out` must not alias the inputs;
// `work` needs 3 * (n - 1) scratch slots.
template <Scalar S>
void mul_into(std::span<const S> x, std::span<const S> y, std::span<S> out, std::span<S> work) {
  const std::size_t n = x.size();
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  if (n == 2) {
    out[0] = x[0] * y[0] - y[1] * x[1];
    out[1] = y[1] * x[0] + x[1] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  const auto a = x.first(h);
  const auto b = x.last(h);
  const auto c = y.first(h);
  const auto d = y.last(h);

  auto d_conj = work.subspan(0, h);
  auto c_conj = work.subspan(h, h);
  auto tmp = work.subspan(2 * h, h);
  auto rest = work.subspan(3 * h);
  conj_into<S>(d, d_conj);
  conj_into<S>(c, c_conj);

  auto lo = out.first(h);
  auto hi = out.last(h);
  mul_into<S>(a, c, lo, rest);
  mul_into<S>(d_conj, b, tmp, rest);
  for (std::size_t i = 0; i < h; ++i) lo[i] -= tmp[i];

  mul_into<S>(d, a, hi, rest);
  mul_into<S>(b, c_conj, tmp, rest);
  for (std::size_t i = 0; i < h; ++i) hi[i] += tmp[i];
}

}  // namespace detail

/// Cayley-Dickson product. Bilinear; level 0 is scalar multiplication.
template <Scalar S>
CDNumber<S> cd_mul(const CDNumber<S>& x, const CDNumber<S>& y) {
  CDNumber<S>::require_same_level(x, y, "cd_mul");
  std::vector<S> out(x.size(), ScalarTraits<S>::zero());
  thread_local std::vector<S> work;
  if (work.size() < 3 * x.size()) work.resize(3 * x.size(), ScalarTraits<S>::zero());
  detail::mul_into<S>(x.coords(), y.coords(), out, std::span<S>(work).first(3 * x.size()));
  return CDNumber<S>(x.level(), std::move(out));
}

template <Scalar S>
CDNumber<S> operator*(const CDNumber<S>& x, const CDNumber<S>& y) {
  return cd_mul(x, y);
}

template <Scalar S>
CDNumber<S> cd_conj(const CDNumber<S>& x) {
  std::vector<S> out(x.size(), ScalarTraits<S>::zero());
  detail::conj_into<S>(x.coords(), out);
  return CDNumber<S>(x.level(), std::move(out));
}

/// Squared norm, kept squared so it stays exact.
template <Scalar S>
S cd_norm_sq(const CDNumber<S>& x) {
  S acc = ScalarTraits<S>::zero();
  for (const auto& c : x.coords()) acc += c * c;
  return acc;
}

/// Result of cd_inverse. `guaranteed` is false from level 4 on, where
/// x* / |x|^2 need not be a two-sided inverse.
template <Scalar S>
struct Inverse {
  CDNumber<S> value;
  bool guaranteed = true;
};

template <Scalar S>
  requires requires(const S& a, const S& b) { S(a / b); }
Inverse<S> cd_inverse(const CDNumber<S>& x) {
  const S n = cd_norm_sq(x);
  if (ScalarTraits<S>::is_zero(n)) throw DivisionByZero("cd_inverse: zero element has no inverse");
  CDNumber<S> c = cd_conj(x);
  std::vector<S> out;
  out.reserve(c.size());
  for (const auto& v : c.coords()) out.push_back(S(v / n));
  return {CDNumber<S>(x.level(), std::move(out)), x.level() <= 3};
}

template <Scalar S>
CDNumber<S> basis_element(int level, std::size_t index) {
  if (level < 0 || level > kMaxConstructibleLevel || index >= CDNumber<S>::dim(level)) {
    throw ContractViolation("basis_element: index " + std::to_string(index) + " out of range for level " +
                            std::to_string(level));
  }
  CDNumber<S> e(level);
  e[index] = ScalarTraits<S>::one();
  return e;
}

/// Inclusion into a higher level by zero-padding the second halves.
template <Scalar S>
CDNumber<S> embed(const CDNumber<S>& x, int target_level) {
  if (target_level < x.level()) {
    throw ContractViolation("embed: target level " + std::to_string(target_level) + " below source level " +
                            std::to_string(x.level()));
  }
  CDNumber<S> out(target_level);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
  return out;
}

/// <x, y> = 1/2 (x* y + y* x), read off the e_0 coordinate.
template <Scalar S>
S inner_product(const CDNumber<S>& x, const CDNumber<S>& y) {
  CDNumber<S>::require_same_level(x, y, "inner_product");
  const CDNumber<S> sym = cd_mul(cd_conj(x), y) + cd_mul(cd_conj(y), x);
  if constexpr (std::is_same_v<S, std::int64_t>) {
    return sym.real_part() / 2;
  } else {
    return S(sym.real_part() / S(2));
  }
}

/// (xy)z - x(yz)
template <Scalar S>
CDNumber<S> associator(const CDNumber<S>& x, const CDNumber<S>& y, const CDNumber<S>& z) {
  CDNumber<S>::require_same_level(x, y, "associator");
  CDNumber<S>::require_same_level(y, z, "associator");
  return cd_mul(cd_mul(x, y), z) - cd_mul(x, cd_mul(y, z));
}

/// xy - yx
template <Scalar S>
CDNumber<S> commutator(const CDNumber<S>& x, const CDNumber<S>& y) {
  return cd_mul(x, y) - cd_mul(y, x);
}

/// Largest absolute coordinate; the metric behind every floating comparison.
inline double max_abs(const CDNumber<double>& x) {
  double m = 0.0;
  for (double c : x.coords()) m = std::max(m, std::abs(c));
  return m;
}

inline bool near(const CDNumber<double>& x, const CDNumber<double>& y, double tol = kDefaultTolerance) {
  return x.level() == y.level() && max_abs(x - y) <= tol;
}

}  // namespace octo
