#include <doctest.h>

#include <cmath>
#include <numbers>

#include "octo/cd_number.hpp"
#include "octo/errors.hpp"
#include "octo/hopf.hpp"
#include "octo/sampling.hpp"

using namespace octo;

namespace {

// Midpoint-rule Gauss double integral, written independently of the
// library's exact segment-pair formula.
double gauss_integral_midpoint(const Polygon3& a, const Polygon3& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec3& a0 = a[i];
    const Vec3& a1 = a[(i + 1) % a.size()];
    const Vec3 ma{(a0[0] + a1[0]) / 2, (a0[1] + a1[1]) / 2, (a0[2] + a1[2]) / 2};
    const Vec3 da{a1[0] - a0[0], a1[1] - a0[1], a1[2] - a0[2]};
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vec3& b0 = b[j];
      const Vec3& b1 = b[(j + 1) % b.size()];
      const Vec3 mb{(b0[0] + b1[0]) / 2, (b0[1] + b1[1]) / 2, (b0[2] + b1[2]) / 2};
      const Vec3 db{b1[0] - b0[0], b1[1] - b0[1], b1[2] - b0[2]};
      const Vec3 r{ma[0] - mb[0], ma[1] - mb[1], ma[2] - mb[2]};
      const Vec3 c{da[1] * db[2] - da[2] * db[1], da[2] * db[0] - da[0] * db[2], da[0] * db[1] - da[1] * db[0]};
      const double d = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
      acc += (r[0] * c[0] + r[1] * c[1] + r[2] * c[2]) / (d * d * d);
    }
  }
  return acc / (4 * std::numbers::pi);
}

Polygon3 circle(const Vec3& center, const Vec3& u, const Vec3& v, double radius, std::size_t n) {
  Polygon3 out;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out.push_back({center[0] + radius * (std::cos(t) * u[0] + std::sin(t) * v[0]),
                   center[1] + radius * (std::cos(t) * u[1] + std::sin(t) * v[1]),
                   center[2] + radius * (std::cos(t) * u[2] + std::sin(t) * v[2])});
  }
  return out;
}

double det(const std::vector<double>& m, std::size_t n) {
  std::vector<double> a = m;
  double d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
    }
    if (a[p * n + c] == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[p * n + k], a[c * n + k]);
      d = -d;
    }
    d *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return d;
}

}  // namespace

TEST_CASE("left multiplication matrix columns are products with basis elements") {
  Rng rng(1);
  const auto b = random_gaussian(3, rng);
  const auto m = left_multiplication_matrix(b.coords(), 3);
  REQUIRE(m.size() == 64);
  for (std::size_t j = 0; j < 8; ++j) {
    const auto col = cd_mul(b, basis_element<double>(3, j));
    for (std::size_t i = 0; i < 8; ++i) CHECK(m[i * 8 + j] == col[i]);
  }
  const auto r = right_multiplication_matrix(b.coords(), 3);
  for (std::size_t j = 0; j < 8; ++j) {
    const auto col = cd_mul(basis_element<double>(3, j), b);
    for (std::size_t i = 0; i < 8; ++i) CHECK(r[i * 8 + j] == col[i]);
  }
}

TEST_CASE("identity multiplication has determinant 1") {
  const auto one = CDNumber<double>::real(0, 1.0);
  const auto m = left_multiplication_matrix(one.coords(), 0);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == 1.0);
  const auto one3 = CDNumber<double>::real(3, 1.0);
  CHECK(det(left_multiplication_matrix(one3.coords(), 3), 8) == doctest::Approx(1.0));
}

TEST_CASE("bidegree proxy is (+1, +1) at levels 1..3") {
  for (int level = 1; level <= 3; ++level) {
    const auto b = multiplication_bidegree(level, 1000, 42);
    CHECK(b.left == 1);
    CHECK(b.right == 1);
    CHECK(b.max_det_deviation < kDeterminantTolerance);
  }
  CHECK_THROWS_AS(multiplication_bidegree(0, 10, 1), ContractViolation);
  CHECK_THROWS_AS(multiplication_bidegree(4, 10, 1), ContractViolation);
}

TEST_CASE("unit determinants agree with an independent elimination") {
  Rng rng(2);
  for (int level = 1; level <= 3; ++level) {
    const std::size_t n = std::size_t{1} << level;
    for (int i = 0; i < 50; ++i) {
      const auto u = random_unit(level, rng);
      CHECK(det(left_multiplication_matrix(u.coords(), level), n) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(det(right_multiplication_matrix(u.coords(), level), n) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("fibers project back to their regular value") {
  const Vec3 s{0.0, 0.6, 0.8};
  const auto fiber = hopf_fiber(s, 128);
  CHECK(fiber.size() == 128);
  for (const auto& p : fiber) CHECK(std::abs(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3] - 1.0) < 1e-12);
}

TEST_CASE("linking of Hopf fibers over antipodal values") {
  const auto r = fiber_linking({0, 0, 1}, {0, 0, -1}, 256);
  CHECK(std::abs(r.linking) == 1);
  CHECK(std::abs(r.raw - r.linking) < 1e-6);
}

TEST_CASE("unlinked circles have linking number 0") {
  const auto a = circle({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 1.0, 128);
  const auto b = circle({5, 0, 0}, {1, 0, 0}, {0, 0, 1}, 1.0, 128);
  CHECK(std::abs(gauss_linking_number(a, b)) < 1e-9);
  // Hopf link of two round circles.
  const auto c = circle({1, 0, 0}, {1, 0, 0}, {0, 0, 1}, 1.0, 128);
  CHECK(std::abs(std::abs(gauss_linking_number(a, c)) - 1.0) < 1e-9);
}

TEST_CASE("library linking agrees with the midpoint Gauss integral") {
  Rng rng(3);
  for (int i = 0; i < 5; ++i) {
    const auto s1 = random_sphere_point(3, rng);
    const auto s2 = random_sphere_point(3, rng);
    const Vec3 a{s1[0], s1[1], s1[2]}, b{s2[0], s2[1], s2[2]};
    const double gap = std::acos(std::clamp(a[0] * b[0] + a[1] * b[1] + a[2] * b[2], -1.0, 1.0));
    if (gap < kMinRegularValueSeparation) continue;
    const auto fa = hopf_fiber(a, 512);
    const auto fb = hopf_fiber(b, 512);
    const Vec4 pole = pole_away_from(fa, fb);
    const auto pa = stereographic_projection(fa, pole);
    const auto pb = stereographic_projection(fb, pole);
    const double exact = gauss_linking_number(pa, pb);
    const double approx = gauss_integral_midpoint(pa, pb);
    CHECK(std::abs(exact - approx) < 0.05);
    CHECK(std::lround(exact) == std::lround(approx));
  }
}

TEST_CASE("linking proxy is stable in segments and across seeds") {
  const int h128 = linking_hopf_invariant(10, 128, 42).hopf_invariant;
  const int h256 = linking_hopf_invariant(10, 256, 42).hopf_invariant;
  const int h512 = linking_hopf_invariant(10, 512, 42).hopf_invariant;
  CHECK(std::abs(h256) == 1);
  CHECK(h128 == h256);
  CHECK(h512 == h256);
  for (std::uint64_t seed : {1u, 7u, 99u}) CHECK(linking_hopf_invariant(10, 256, seed).hopf_invariant == h256);
  const auto b = multiplication_bidegree(1, 100, 42);
  CHECK(std::abs(h256) == std::abs(b.left * b.right));
  CHECK_THROWS_AS(linking_hopf_invariant(1, kMinSegments - 1, 1), ContractViolation);
}
