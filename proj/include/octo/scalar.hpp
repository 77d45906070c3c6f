#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace octo {

/// Exact scalar for all algebraic-identity paths.
using Rational = mpq_class;

/// Absolute tolerance for floating comparisons on unit-scale data.
inline constexpr double kDefaultTolerance = 1e-9;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& s) { return sgn(s) == 0; }
  static Rational from_int(long v) { return Rational(v); }
  static double to_double(const Rational& s) { return s.get_d(); }
  static std::string to_string(const Rational& s) { return s.get_str(); }
};

/// Integer scalars are exact as long as entries stay small; used for
/// basis-element products where every coordinate is 0 or +-1.
template <>
struct ScalarTraits<std::int64_t> {
  static constexpr bool exact = true;
  static std::int64_t zero() { return 0; }
  static std::int64_t one() { return 1; }
  static bool is_zero(std::int64_t s) { return s == 0; }
  static std::int64_t from_int(long v) { return v; }
  static double to_double(std::int64_t s) { return static_cast<double>(s); }
  static std::string to_string(std::int64_t s) { return std::to_string(s); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double s) { return s == 0.0; }
  static double from_int(long v) { return static_cast<double>(v); }
  static double to_double(double s) { return s; }
  static std::string to_string(double s) { return std::to_string(s); }
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { ScalarTraits<S>::zero() } -> std::convertible_to<S>;
  { S(a + b) };
  { S(a - b) };
  { S(a * b) };
  { S(-a) };
};

template <class S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

inline bool near(double a, double b, double tol = kDefaultTolerance) {
  return std::abs(a - b) <= tol;
}

}  // namespace octo
