#include "octo/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "octo/errors.hpp"
#include "octo/projective.hpp"
#include "octo/sampling.hpp"

namespace octo {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot4(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

bool unit_normal(Vec3& v) {
  const double n = std::sqrt(dot(v, v));
  if (n < 1e-300) return false;
  for (auto& c : v) c /= n;
  return true;
}

double clamped_asin(double v) { return std::asin(std::clamp(v, -1.0, 1.0)); }

// Signed solid angle subtended by segment p1p2 as seen along segment p3p4
// (Klenin-Langowski form of the Gauss integral for two straight segments).
double segment_pair_angle(const Vec3& p1, const Vec3& p2, const Vec3& p3, const Vec3& p4) {
  const Vec3 r13 = sub(p3, p1);
  const Vec3 r14 = sub(p4, p1);
  const Vec3 r23 = sub(p3, p2);
  const Vec3 r24 = sub(p4, p2);
  Vec3 n1 = cross(r13, r14);
  Vec3 n2 = cross(r14, r24);
  Vec3 n3 = cross(r24, r23);
  Vec3 n4 = cross(r23, r13);
  if (!unit_normal(n1) || !unit_normal(n2) || !unit_normal(n3) || !unit_normal(n4)) return 0.0;
  const double omega =
      clamped_asin(dot(n1, n2)) + clamped_asin(dot(n2, n3)) + clamped_asin(dot(n3, n4)) + clamped_asin(dot(n4, n1));
  const double orient = dot(cross(sub(p4, p3), sub(p2, p1)), r13);
  return orient > 0 ? omega : (orient < 0 ? -omega : 0.0);
}

double angular_distance(const Vec3& a, const Vec3& b) { return std::acos(std::clamp(dot(a, b), -1.0, 1.0)); }

Vec3 random_s2(Rng& rng) {
  const auto v = random_sphere_point(3, rng);
  return {v[0], v[1], v[2]};
}

double multiplication_det(const std::vector<double>& m, int level) {
  const auto n = static_cast<Eigen::Index>(Real::dim(level));
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m[static_cast<std::size_t>(i * n + j)];
  }
  return e.determinant();
}

}  // namespace

std::vector<double> left_multiplication_matrix(std::span<const double> b, int level) {
  const std::size_t n = Real::dim(level);
  const Real bb(level, std::vector<double>(b.begin(), b.end()));
  std::vector<double> m(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const Real col = cd_mul(bb, basis_element<double>(level, j));
    for (std::size_t i = 0; i < n; ++i) m[i * n + j] = col[i];
  }
  return m;
}

std::vector<double> right_multiplication_matrix(std::span<const double> a, int level) {
  const std::size_t n = Real::dim(level);
  const Real aa(level, std::vector<double>(a.begin(), a.end()));
  std::vector<double> m(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const Real col = cd_mul(basis_element<double>(level, j), aa);
    for (std::size_t i = 0; i < n; ++i) m[i * n + j] = col[i];
  }
  return m;
}

Bidegree multiplication_bidegree(int level, std::size_t samples, std::uint64_t seed) {
  if (level < 1 || level > 3) throw ContractViolation("multiplication_bidegree: level must be 1, 2 or 3");
  if (samples == 0) throw ContractViolation("multiplication_bidegree: need at least one sample");
  Rng rng(seed);
  Bidegree out;
  out.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const Real b = random_unit(level, rng);
    const Real a = random_unit(level, rng);
    const double dl = multiplication_det(left_multiplication_matrix(b.coords(), level), level);
    const double dr = multiplication_det(right_multiplication_matrix(a.coords(), level), level);
    out.max_det_deviation = std::max({out.max_det_deviation, std::abs(std::abs(dl) - 1.0), std::abs(std::abs(dr) - 1.0)});
    if (out.max_det_deviation > kDeterminantTolerance) {
      throw Inconsistency("multiplication_bidegree: determinant of a unit multiplication is not +-1");
    }
    const int sl = dl > 0 ? 1 : -1;
    const int sr = dr > 0 ? 1 : -1;
    if (s == 0) {
      out.left = sl;
      out.right = sr;
    } else if (sl != out.left || sr != out.right) {
      throw Inconsistency("multiplication_bidegree: determinant sign changes across unit elements");
    }
  }
  return out;
}

std::vector<Vec4> hopf_fiber(const Vec3& s, std::size_t segments) {
  const LinePoint base = sphere_to_line(s, 1);
  std::vector<Vec4> out;
  out.reserve(segments);
  for (std::size_t k = 0; k < segments; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(segments);
    const Real u(1, {std::cos(theta), std::sin(theta)});
    const Real x = cd_mul(base.x(), u);
    const Real y = cd_mul(base.y(), u);
    const auto image = line_to_sphere(attaching_map(x, y));
    for (std::size_t i = 0; i < 3; ++i) {
      if (std::abs(image[i] - s[i]) > 1e-9) throw GeometryError("hopf_fiber: vertex does not lie over the base point");
    }
    out.push_back({x[0], x[1], y[0], y[1]});
  }
  return out;
}

Polygon3 stereographic_projection(std::span<const Vec4> points, const Vec4& pole) {
  // Orthonormal frame of the tangent space at the pole.
  std::vector<Vec4> frame;
  for (std::size_t axis = 0; axis < 4 && frame.size() < 3; ++axis) {
    Vec4 v{};
    v[axis] = 1.0;
    const double along = dot4(v, pole);
    for (std::size_t i = 0; i < 4; ++i) v[i] -= along * pole[i];
    for (const auto& f : frame) {
      const double c = dot4(v, f);
      for (std::size_t i = 0; i < 4; ++i) v[i] -= c * f[i];
    }
    const double n = std::sqrt(dot4(v, v));
    if (n < 1e-6) continue;
    for (auto& c : v) c /= n;
    frame.push_back(v);
  }
  Eigen::Matrix4d orient;
  for (int i = 0; i < 4; ++i) {
    orient(i, 0) = frame[0][static_cast<std::size_t>(i)];
    orient(i, 1) = frame[1][static_cast<std::size_t>(i)];
    orient(i, 2) = frame[2][static_cast<std::size_t>(i)];
    orient(i, 3) = pole[static_cast<std::size_t>(i)];
  }
  if (orient.determinant() < 0) {
    for (auto& c : frame[2]) c = -c;
  }

  Polygon3 out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const double denom = 1.0 - dot4(p, pole);
    if (denom < 1e-9) throw GeometryError("stereographic_projection: point coincides with the pole");
    out.push_back({dot4(p, frame[0]) / denom, dot4(p, frame[1]) / denom, dot4(p, frame[2]) / denom});
  }
  return out;
}

Vec4 pole_away_from(std::span<const Vec4> a, std::span<const Vec4> b) {
  std::vector<Vec4> candidates;
  for (std::size_t i = 0; i < 4; ++i) {
    Vec4 e{};
    e[i] = 1.0;
    candidates.push_back(e);
    e[i] = -1.0;
    candidates.push_back(e);
  }
  Rng rng(0x0be11e);
  for (int i = 0; i < 256; ++i) {
    const auto v = random_sphere_point(4, rng);
    candidates.push_back({v[0], v[1], v[2], v[3]});
  }
  auto clearance = [&](const Vec4& c) {
    double m = 4.0;
    for (auto pts : {a, b}) {
      for (const auto& p : pts) {
        double d = 0.0;
        for (std::size_t i = 0; i < 4; ++i) d += (p[i] - c[i]) * (p[i] - c[i]);
        m = std::min(m, d);
      }
    }
    return m;
  };
  Vec4 best = candidates.front();
  double best_clear = -1.0;
  for (const auto& c : candidates) {
    const double cl = clearance(c);
    if (cl > best_clear) {
      best_clear = cl;
      best = c;
    }
  }
  return best;
}

double gauss_linking_number(const Polygon3& a, const Polygon3& b, Execution exec) {
  if (a.size() < 3 || b.size() < 3) throw ContractViolation("gauss_linking_number: polygons need >= 3 vertices");
  // Per-row partial sums, added in a fixed order so both paths agree bitwise.
  std::vector<double> rows(a.size(), 0.0);
  for_each_index(
      a.size(),
      [&](std::size_t i) {
        const Vec3& p1 = a[i];
        const Vec3& p2 = a[(i + 1) % a.size()];
        double acc = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) acc += segment_pair_angle(p1, p2, b[j], b[(j + 1) % b.size()]);
        rows[i] = acc;
      },
      exec);
  double total = 0.0;
  for (double r : rows) total += r;
  return total / (4.0 * std::numbers::pi);
}

LinkingSample fiber_linking(const Vec3& first, const Vec3& second, std::size_t segments, Execution exec) {
  if (segments < kMinSegments) {
    throw ContractViolation("fiber_linking: need at least " + std::to_string(kMinSegments) + " segments");
  }
  const auto fa = hopf_fiber(first, segments);
  const auto fb = hopf_fiber(second, segments);
  const Vec4 pole = pole_away_from(fa, fb);
  LinkingSample s{first, second, 0.0, 0};
  s.raw = gauss_linking_number(stereographic_projection(fa, pole), stereographic_projection(fb, pole), exec);
  s.linking = static_cast<int>(std::lround(s.raw));
  if (std::abs(s.raw - s.linking) > 0.1) {
    throw GeometryError("fiber_linking: linking number " + std::to_string(s.raw) + " is not near an integer");
  }
  return s;
}

LinkingReport linking_hopf_invariant(std::size_t samples, std::size_t segments, std::uint64_t seed, Execution exec) {
  if (samples == 0) throw ContractViolation("linking_hopf_invariant: need at least one pair");
  Rng rng(seed);
  LinkingReport report;
  report.segments = segments;
  constexpr int kMaxRedraws = 1000;
  for (std::size_t k = 0; k < samples; ++k) {
    Vec3 p = random_s2(rng);
    Vec3 q = random_s2(rng);
    int redraws = 0;
    while (angular_distance(p, q) < kMinRegularValueSeparation) {
      if (++redraws > kMaxRedraws) throw GeometryError("linking_hopf_invariant: cannot separate regular values");
      q = random_s2(rng);
    }
    report.pairs.push_back(fiber_linking(p, q, segments, exec));
  }
  report.hopf_invariant = report.pairs.front().linking;
  for (const auto& s : report.pairs) {
    if (s.linking != report.hopf_invariant) {
      throw GeometryError("linking_hopf_invariant: fiber pairs disagree on the linking number");
    }
  }
  return report;
}

}  // namespace octo
