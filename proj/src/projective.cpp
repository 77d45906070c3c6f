#include "octo/projective.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "octo/errors.hpp"

namespace octo {

namespace {

void require_projective_level(int level, const char* what) {
  if (level < 0 || level > kMaxProjectiveLevel) {
    throw ContractViolation(std::string(what) + ": level " + std::to_string(level) + " is not one of 0..3");
  }
}

Real scaled(const Real& x, double s) { return x * s; }

double euclidean_norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

// Non-anchor slots in increasing order.
std::array<std::size_t, 2> free_slots(std::size_t anchor) {
  switch (anchor) {
    case 0:
      return {1, 2};
    case 1:
      return {0, 2};
    default:
      return {0, 1};
  }
}

}  // namespace

bool generates_associative_subalgebra(const Real& x, const Real& y, const Real& z, double tol) {
  if (x.level() <= 2) return true;
  // Octonion-sized products on stack buffers; this runs for every point built.
  constexpr std::size_t kMax = 8;
  using Buf = std::array<double, kMax>;
  const std::size_t n = x.size();
  const std::array<Real, 6> gens{x, y, z, cd_mul(x, cd_conj(y)), cd_mul(x, cd_conj(z)), cd_mul(y, cd_conj(z))};
  std::array<Buf, 36> prod{};
  Buf lhs{}, rhs{};
  std::array<double, 3 * kMax> scratch{};
  auto mul = [&](std::span<const double> a, std::span<const double> b, std::span<double> out) {
    detail::mul_into<double>(a, b, out, std::span<double>(scratch).first(3 * n));
  };
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) mul(gens[i].coords(), gens[j].coords(), std::span(prod[i * 6 + j]).first(n));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      for (std::size_t k = 0; k < 6; ++k) {
        mul(std::span<const double>(prod[i * 6 + j]).first(n), gens[k].coords(), std::span(lhs).first(n));
        mul(gens[i].coords(), std::span<const double>(prod[j * 6 + k]).first(n), std::span(rhs).first(n));
        for (std::size_t t = 0; t < n; ++t) {
          if (std::abs(lhs[t] - rhs[t]) > tol) return false;
        }
      }
    }
  }
  return true;
}

TriplePoint::TriplePoint(Real x, Real y, Real z, double tol) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (x_.level() != y_.level() || y_.level() != z_.level()) throw ContractViolation("TriplePoint: level mismatch");
  require_projective_level(x_.level(), "TriplePoint");
  const double n = cd_norm_sq(x_) + cd_norm_sq(y_) + cd_norm_sq(z_);
  if (std::abs(n - 1.0) > tol) {
    throw ContractViolation("TriplePoint: |x|^2 + |y|^2 + |z|^2 = " + std::to_string(n) + ", expected 1");
  }
  if (!generates_associative_subalgebra(x_, y_, z_, tol)) {
    throw ContractViolation("TriplePoint: entries do not generate an associative subalgebra");
  }
}

double InvariantSextuple::distance(const InvariantSextuple& o) const {
  return std::max({max_abs(xx - o.xx), max_abs(xy - o.xy), max_abs(xz - o.xz), max_abs(yy - o.yy),
                   max_abs(yz - o.yz), max_abs(zz - o.zz)});
}

InvariantSextuple invariants_of(const TriplePoint& p) {
  const Real xc = cd_conj(p.x());
  const Real yc = cd_conj(p.y());
  const Real zc = cd_conj(p.z());
  return {cd_mul(p.x(), xc), cd_mul(p.x(), yc), cd_mul(p.x(), zc),
          cd_mul(p.y(), yc), cd_mul(p.y(), zc), cd_mul(p.z(), zc)};
}

bool equivalent(const TriplePoint& p, const TriplePoint& q, double tol) {
  if (p.level() != q.level()) return false;
  return invariants_of(p).distance(invariants_of(q)) <= tol;
}

Functional::Functional(double a, double b, double c) : coeffs_{a, b, c} {
  if (a == 0.0 && b == 0.0 && c == 0.0) throw ContractViolation("Functional: (a, b, c) must not be (0, 0, 0)");
}

std::size_t Functional::anchor() const {
  for (std::size_t slot : {2u, 1u, 0u}) {
    if (std::abs(coeffs_[slot]) >= kAnchorThreshold) return slot;
  }
  throw ContractViolation("Functional: no coefficient is large enough to anchor a chart");
}

Real eval_functional(const Functional& f, const TriplePoint& p) {
  return scaled(p.x(), f.a()) + scaled(p.y(), f.b()) + scaled(p.z(), f.c());
}

bool in_chart_domain(const Functional& f, const TriplePoint& p, double tol) {
  return std::sqrt(cd_norm_sq(eval_functional(f, p))) > tol;
}

std::pair<Real, Real> chart_forward(const Functional& f, const TriplePoint& p, double tol) {
  const std::size_t anchor = f.anchor();
  const Real l = eval_functional(f, p);
  const double n = cd_norm_sq(l);
  if (std::sqrt(n) <= tol) throw OutsideChart("chart_forward: l(p) vanishes, point is outside the chart");
  const Real lc = scaled(cd_conj(l), 1.0 / n);
  const auto [i, j] = free_slots(anchor);
  return {cd_mul(p[i], lc), cd_mul(p[j], lc)};
}

TriplePoint chart_backward(const Functional& f, const Real& u, const Real& v, double tol) {
  Real::require_same_level(u, v, "chart_backward");
  require_projective_level(u.level(), "chart_backward");
  const std::size_t anchor = f.anchor();
  const auto [i, j] = free_slots(anchor);
  const Real one = Real::real(u.level(), 1.0);
  const Real w = scaled(one - scaled(u, f[i]) - scaled(v, f[j]), 1.0 / f[anchor]);
  // r > 0: if u = v = 0 then w = 1/c.
  const double r = std::sqrt(cd_norm_sq(u) + cd_norm_sq(v) + cd_norm_sq(w));
  std::array<Real, 3> slots;
  slots[i] = scaled(u, 1.0 / r);
  slots[j] = scaled(v, 1.0 / r);
  slots[anchor] = scaled(w, 1.0 / r);
  const double norm = std::sqrt(cd_norm_sq(slots[0]) + cd_norm_sq(slots[1]) + cd_norm_sq(slots[2]));
  for (auto& s : slots) s = scaled(s, 1.0 / norm);
  return TriplePoint(slots[0], slots[1], slots[2], tol);
}

Functional separating_functional(const TriplePoint& p, const TriplePoint& q, double tol) {
  auto margin = [&](const Functional& f) {
    const double scale = std::sqrt(f.a() * f.a() + f.b() * f.b() + f.c() * f.c());
    const double mp = std::sqrt(cd_norm_sq(eval_functional(f, p)));
    const double mq = std::sqrt(cd_norm_sq(eval_functional(f, q)));
    return std::min(mp, mq) / scale;
  };

  // Grid ordered by support size so axis functionals win ties.
  std::vector<std::array<int, 3>> grid;
  for (int support = 1; support <= 3; ++support) {
    for (int a : {0, 1, -1}) {
      for (int b : {0, 1, -1}) {
        for (int c : {0, 1, -1}) {
          if ((a != 0) + (b != 0) + (c != 0) == support) grid.push_back({a, b, c});
        }
      }
    }
  }
  std::optional<Functional> best;
  double best_margin = 0.0;
  for (const auto& g : grid) {
    const Functional f(g[0], g[1], g[2]);
    const double m = margin(f);
    if (m > best_margin) {
      best_margin = m;
      best = f;
    }
  }
  if (best && best_margin > tol) return *best;

  Rng rng(0x5eed);
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto d = random_sphere_point(3, rng);
    const Functional f(d[0], d[1], d[2]);
    if (margin(f) > tol) return f;
  }
  throw SearchFailure("separating_functional: no functional is nonzero on both points");
}

LinePoint::LinePoint(Real x, Real y, double tol) : x_(std::move(x)), y_(std::move(y)) {
  Real::require_same_level(x_, y_, "LinePoint");
  require_projective_level(x_.level(), "LinePoint");
  const double n = cd_norm_sq(x_) + cd_norm_sq(y_);
  if (std::abs(n - 1.0) > tol) {
    throw ContractViolation("LinePoint: |x|^2 + |y|^2 = " + std::to_string(n) + ", expected 1");
  }
}

bool line_equivalent(const LinePoint& p, const LinePoint& q, double tol) {
  if (p.level() != q.level()) return false;
  const double dxx = max_abs(cd_mul(p.x(), cd_conj(p.x())) - cd_mul(q.x(), cd_conj(q.x())));
  const double dxy = max_abs(cd_mul(p.x(), cd_conj(p.y())) - cd_mul(q.x(), cd_conj(q.y())));
  const double dyy = max_abs(cd_mul(p.y(), cd_conj(p.y())) - cd_mul(q.y(), cd_conj(q.y())));
  return std::max({dxx, dxy, dyy}) <= tol;
}

TriplePoint line_include(const LinePoint& p) { return TriplePoint(p.x(), p.y(), Real(p.level())); }

std::vector<double> line_to_sphere(const LinePoint& p) {
  const Real w = scaled(cd_mul(p.x(), cd_conj(p.y())), 2.0);
  std::vector<double> s(w.coords().begin(), w.coords().end());
  s.push_back(cd_norm_sq(p.x()) - cd_norm_sq(p.y()));
  return s;
}

LinePoint sphere_to_line(std::span<const double> s, int level, double tol) {
  require_projective_level(level, "sphere_to_line");
  const std::size_t d = Real::dim(level);
  if (s.size() != d + 1) throw ContractViolation("sphere_to_line: expected a point of R^(d+1)");
  if (std::abs(euclidean_norm(s) - 1.0) > tol) throw ContractViolation("sphere_to_line: point is not on the sphere");
  const Real w(level, std::vector<double>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d)));
  const double t = std::clamp(s[d], -1.0, 1.0);
  Real x(level), y(level);
  if (t >= 0.0) {
    const double xr = std::sqrt((1.0 + t) / 2.0);
    x = Real::real(level, xr);
    y = scaled(cd_conj(w), 1.0 / (2.0 * xr));
  } else {
    const double yr = std::sqrt((1.0 - t) / 2.0);
    y = Real::real(level, yr);
    x = scaled(w, 1.0 / (2.0 * yr));
  }
  const double n = std::sqrt(cd_norm_sq(x) + cd_norm_sq(y));
  return LinePoint(scaled(x, 1.0 / n), scaled(y, 1.0 / n), tol);
}

LinePoint attaching_map(const Real& x, const Real& y, double tol) { return LinePoint(x, y, tol); }

TriplePoint disk_extension(const Real& x, const Real& y, double tol) {
  Real::require_same_level(x, y, "disk_extension");
  const double n = cd_norm_sq(x) + cd_norm_sq(y);
  if (n > 1.0 + tol) throw ContractViolation("disk_extension: (x, y) lies outside the unit disk");
  // Rounding in n is O(ulp); sqrt would inflate it to O(sqrt(ulp)) on the boundary.
  const double gap = 1.0 - n;
  const double z = gap > 64 * std::numeric_limits<double>::epsilon() ? std::sqrt(gap) : 0.0;
  return TriplePoint(x, y, Real::real(x.level(), z), tol);
}

Real random_unit_in_generated_subalgebra(const TriplePoint& p, Rng& rng) {
  std::normal_distribution<double> coeff(0.0, 1.0);
  for (;;) {
    Real w = Real::real(p.level(), coeff(rng));
    w += scaled(p.x(), coeff(rng));
    w += scaled(p.y(), coeff(rng));
    w += scaled(p.z(), coeff(rng));
    w += scaled(cd_mul(p.x(), p.y()), coeff(rng));
    w += scaled(cd_mul(p.y(), p.z()), coeff(rng));
    if (cd_norm_sq(w) > 1e-6) return normalized(w);
  }
}

TriplePoint right_multiply(const TriplePoint& p, const Real& w, double tol) {
  return TriplePoint(cd_mul(p.x(), w), cd_mul(p.y(), w), cd_mul(p.z(), w), tol);
}

std::vector<Functional> coordinate_functionals() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

TriplePoint random_triple_point(int level, Rng& rng) {
  require_projective_level(level, "random_triple_point");
  const auto charts = coordinate_functionals();
  std::uniform_int_distribution<std::size_t> pick(0, charts.size() - 1);
  const Functional& f = charts[pick(rng)];
  const Real u = random_gaussian(level, rng);
  const Real v = random_gaussian(level, rng);
  return chart_backward(f, u, v);
}

double ChartRoundtripReport::max_error() const {
  return std::max({forward_error, backward_error, well_defined_error});
}

ChartRoundtripReport chart_roundtrip(int level, std::size_t samples, std::uint64_t seed, double tol, Execution exec) {
  require_projective_level(level, "chart_roundtrip");
  struct Sample {
    Functional f;
    Real u, v;
    TriplePoint p;
    Real w;
  };
  Rng rng(seed);
  std::vector<Sample> inputs;
  const auto charts = coordinate_functionals();
  inputs.reserve(charts.size() * samples);
  for (const auto& f : charts) {
    for (std::size_t i = 0; i < samples; ++i) {
      Real u = random_gaussian(level, rng);
      Real v = random_gaussian(level, rng);
      TriplePoint p = random_triple_point(level, rng);
      // Resample the rare point sitting on the chart boundary.
      while (!in_chart_domain(f, p, 1e-6)) p = random_triple_point(level, rng);
      Real w = random_unit_in_generated_subalgebra(p, rng);
      inputs.push_back({f, std::move(u), std::move(v), std::move(p), std::move(w)});
    }
  }

  struct Errors {
    double forward = 0.0, backward = 0.0, well_defined = 0.0;
  };
  std::vector<Errors> errors(inputs.size());
  auto evaluate = [&](std::size_t k) {
    const Sample& s = inputs[k];
    const auto [u2, v2] = chart_forward(s.f, chart_backward(s.f, s.u, s.v));
    const auto [pu, pv] = chart_forward(s.f, s.p);
    const TriplePoint back = chart_backward(s.f, pu, pv);
    const auto [qu, qv] = chart_forward(s.f, right_multiply(s.p, s.w));
    errors[k] = {std::max(max_abs(u2 - s.u), max_abs(v2 - s.v)), invariants_of(back).distance(invariants_of(s.p)),
                 std::max(max_abs(qu - pu), max_abs(qv - pv))};
  };
  for_each_index(inputs.size(), evaluate, exec);

  ChartRoundtripReport report;
  report.level = level;
  report.samples = samples;
  report.seed = seed;
  report.tolerance = tol;
  for (const auto& e : errors) {
    report.forward_error = std::max(report.forward_error, e.forward);
    report.backward_error = std::max(report.backward_error, e.backward);
    report.well_defined_error = std::max(report.well_defined_error, e.well_defined);
  }
  return report;
}

EquivalenceReport equivalence_check(int level, std::size_t samples, std::uint64_t seed, double tol, Execution exec) {
  require_projective_level(level, "equivalence_check");
  struct Sample {
    TriplePoint p, q, r, other;
  };
  Rng rng(seed);
  std::vector<Sample> inputs;
  inputs.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    TriplePoint p = random_triple_point(level, rng);
    TriplePoint q = right_multiply(p, random_unit_in_generated_subalgebra(p, rng));
    TriplePoint r = right_multiply(q, random_unit_in_generated_subalgebra(q, rng));
    TriplePoint other = random_triple_point(level, rng);
    inputs.push_back({std::move(p), std::move(q), std::move(r), std::move(other)});
  }

  struct Outcome {
    double error = 0.0;
    bool false_positive = false;
    bool relation_failure = false;
  };
  std::vector<Outcome> outcomes(inputs.size());
  for_each_index(
      inputs.size(),
      [&](std::size_t k) {
        const Sample& s = inputs[k];
        const auto ip = invariants_of(s.p);
        const auto iq = invariants_of(s.q);
        const auto ir = invariants_of(s.r);
        Outcome o;
        o.error = std::max({ip.distance(iq), iq.distance(ir), ip.distance(ir)});
        const bool reflexive = equivalent(s.p, s.p, tol);
        const bool symmetric = equivalent(s.p, s.q, tol) == equivalent(s.q, s.p, tol);
        const bool transitive =
            !(equivalent(s.p, s.q, tol) && equivalent(s.q, s.r, tol)) || equivalent(s.p, s.r, tol);
        o.relation_failure = !(reflexive && symmetric && transitive);
        o.false_positive = equivalent(s.p, s.other, tol);
        outcomes[k] = o;
      },
      exec);

  EquivalenceReport report;
  report.level = level;
  report.samples = samples;
  report.seed = seed;
  report.tolerance = tol;
  for (const auto& o : outcomes) {
    report.max_error = std::max(report.max_error, o.error);
    report.false_positives += o.false_positive ? 1 : 0;
    report.relation_failures += o.relation_failure ? 1 : 0;
  }
  return report;
}

}  // namespace octo
