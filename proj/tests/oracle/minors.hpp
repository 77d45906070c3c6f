#pragma once

// Brute-force invariant factors: d_k = D_k / D_{k-1}, D_k the gcd of all
// k x k minors. Exponential, fine up to 4 x 4.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

inline std::int64_t det_laplace(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  std::int64_t acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const std::int64_t term = m[0][c] * det_laplace(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::int64_t minor_gcd(const Dense& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(rows, k, 0, cur, rs);
  subsets(cols, k, 0, cur, cs);
  std::int64_t g = 0;
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      Dense sub(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
      }
      g = std::gcd(g, det_laplace(sub));
    }
  }
  return g;
}

/// Nonzero invariant factors, in divisibility order.
inline std::vector<std::int64_t> invariant_factors(const Dense& m) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const std::int64_t d = minor_gcd(m, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

/// Rank over Z/p by Gaussian elimination, p prime.
inline std::size_t rank_mod_p(Dense m, std::int64_t p) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  auto md = [p](std::int64_t v) { return ((v % p) + p) % p; };
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, e = p - 2, b = md(a);
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && md(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::int64_t f = md(m[r][c]) * iv % p;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = md(m[r][k] - f * m[rank][k]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
