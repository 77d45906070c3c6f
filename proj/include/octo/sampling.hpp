#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "octo/cd_number.hpp"

namespace octo {

using Rng = std::mt19937_64;

/// Exact samples draw integer coordinates uniformly from [-kSampleBound, kSampleBound].
inline constexpr int kSampleBound = 9;

inline CDNumber<Rational> random_exact(int level, Rng& rng) {
  std::uniform_int_distribution<int> dist(-kSampleBound, kSampleBound);
  std::vector<Rational> c;
  c.reserve(CDNumber<Rational>::dim(level));
  for (std::size_t i = 0; i < CDNumber<Rational>::dim(level); ++i) c.emplace_back(dist(rng));
  return CDNumber<Rational>(level, std::move(c));
}

inline CDNumber<Rational> random_exact_nonzero(int level, Rng& rng) {
  for (;;) {
    auto x = random_exact(level, rng);
    if (!x.is_zero()) return x;
  }
}

/// Gaussian coordinates; direction is uniform on the sphere once normalized.
inline CDNumber<double> random_gaussian(int level, Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> c(CDNumber<double>::dim(level));
  for (auto& v : c) v = dist(rng);
  return CDNumber<double>(level, std::move(c));
}

inline CDNumber<double> normalized(const CDNumber<double>& x) {
  const double n = std::sqrt(cd_norm_sq(x));
  return x * (1.0 / n);
}

inline CDNumber<double> random_unit(int level, Rng& rng) {
  for (;;) {
    auto x = random_gaussian(level, rng);
    if (cd_norm_sq(x) > 1e-6) return normalized(x);
  }
}

/// Uniform point of the unit sphere S^(n-1) in R^n.
inline std::vector<double> random_sphere_point(std::size_t n, Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  for (;;) {
    std::vector<double> v(n);
    double s = 0.0;
    for (auto& c : v) {
      c = dist(rng);
      s += c * c;
    }
    if (s < 1e-6) continue;
    const double inv = 1.0 / std::sqrt(s);
    for (auto& c : v) c *= inv;
    return v;
  }
}

}  // namespace octo
