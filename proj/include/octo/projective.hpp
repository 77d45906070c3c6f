#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "octo/cd_number.hpp"
#include "octo/parallel.hpp"
#include "octo/sampling.hpp"

namespace octo {

/// Floating element of one of R, C, H, O (levels 0 through 3).
using Real = CDNumber<double>;

inline constexpr int kMaxProjectiveLevel = 3;
inline constexpr int kDefaultProjectiveLevel = 3;

/// Coefficients below this magnitude cannot anchor a chart.
inline constexpr double kAnchorThreshold = 1e-12;

/// True when x, y, z generate an associative subalgebra, tested as the
/// vanishing of every associator among {x, y, z, xy*, xz*, yz*}. Exact for
/// points built from two generators; a proxy in general.
bool generates_associative_subalgebra(const Real& x, const Real& y, const Real& z, double tol = kDefaultTolerance);

/// Representative (x, y, z) of a point of the projective plane: unit norm,
/// entries in an associative subalgebra. Construction validates both.
class TriplePoint {
 public:
  TriplePoint(Real x, Real y, Real z, double tol = kDefaultTolerance);

  const Real& x() const { return x_; }
  const Real& y() const { return y_; }
  const Real& z() const { return z_; }
  const Real& operator[](std::size_t i) const { return i == 0 ? x_ : (i == 1 ? y_ : z_); }
  int level() const { return x_.level(); }

 private:
  Real x_, y_, z_;
};

/// xx*, xy*, xz*, yy*, yz*, zz*: a complete invariant of the class.
struct InvariantSextuple {
  Real xx, xy, xz, yy, yz, zz;

  /// Largest coordinate difference over all six entries.
  double distance(const InvariantSextuple& o) const;
};

InvariantSextuple invariants_of(const TriplePoint& p);

bool equivalent(const TriplePoint& p, const TriplePoint& q, double tol = kDefaultTolerance);

/// l(x, y, z) = ax + by + cz with real a, b, c not all zero.
class Functional {
 public:
  Functional(double a, double b, double c);

  double a() const { return coeffs_[0]; }
  double b() const { return coeffs_[1]; }
  double c() const { return coeffs_[2]; }
  double operator[](std::size_t i) const { return coeffs_[i]; }

  /// Coordinate slot whose coefficient anchors the chart: z when |c| is
  /// usable, then y, then x. Throws ContractViolation if none is.
  std::size_t anchor() const;

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  double coeffs_[3];
};

Real eval_functional(const Functional& f, const TriplePoint& p);

/// Membership in U_f: |l(p)| > tol.
bool in_chart_domain(const Functional& f, const TriplePoint& p, double tol = kDefaultTolerance);

/// Chart coordinates (u l*/|l|^2, v l*/|l|^2) where u, v are the two
/// non-anchor entries of p in order. Throws OutsideChart if p is not in U_f.
std::pair<Real, Real> chart_forward(const Functional& f, const TriplePoint& p, double tol = kDefaultTolerance);

/// Inverse chart: the anchor slot receives (1 - alpha u - beta v) / anchor
/// coefficient, then the triple is scaled to unit norm.
TriplePoint chart_backward(const Functional& f, const Real& u, const Real& v, double tol = kDefaultTolerance);

/// A functional not vanishing on either point. Scans the grid {-1,0,1}^3
/// for the candidate with the largest normalized margin, then falls back to
/// seeded random unit triples. Throws SearchFailure when nothing works.
Functional separating_functional(const TriplePoint& p, const TriplePoint& q, double tol = kDefaultTolerance);

/// Representative [x, y] of a point of the projective line.
class LinePoint {
 public:
  LinePoint(Real x, Real y, double tol = kDefaultTolerance);

  const Real& x() const { return x_; }
  const Real& y() const { return y_; }
  int level() const { return x_.level(); }

 private:
  Real x_, y_;
};

bool line_equivalent(const LinePoint& p, const LinePoint& q, double tol = kDefaultTolerance);

TriplePoint line_include(const LinePoint& p);

/// (2 xy*, |x|^2 - |y|^2) in R^d x R, a point of S^d.
std::vector<double> line_to_sphere(const LinePoint& p);

/// Inverse of line_to_sphere up to equivalence. For s = (w, t) picks a real
/// x = sqrt((1 + t) / 2) when t >= 0 and a real y = sqrt((1 - t) / 2) otherwise.
LinePoint sphere_to_line(std::span<const double> s, int level, double tol = kDefaultTolerance);

/// S^(2d-1) -> AP^1, (x, y) -> [x, y]
LinePoint attaching_map(const Real& x, const Real& y, double tol = kDefaultTolerance);

/// D^(2d) -> AP^2, (x, y) -> [x, y, sqrt(1 - |x|^2 - |y|^2)]
TriplePoint disk_extension(const Real& x, const Real& y, double tol = kDefaultTolerance);

/// Unit element of the subalgebra generated by the entries of p, drawn as a
/// normalized random polynomial in them.
Real random_unit_in_generated_subalgebra(const TriplePoint& p, Rng& rng);

/// (xw, yw, zw), equivalent to p whenever w is a unit of the subalgebra
/// generated by the entries of p.
TriplePoint right_multiply(const TriplePoint& p, const Real& w, double tol = kDefaultTolerance);

/// Random point of the plane: chart_backward of a random Gaussian pair
/// through a random coordinate chart.
TriplePoint random_triple_point(int level, Rng& rng);

/// Coordinate functionals (1,0,0), (0,1,0), (0,0,1).
std::vector<Functional> coordinate_functionals();

struct ChartRoundtripReport {
  int level = kDefaultProjectiveLevel;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// max |phi(psi(u, v)) - (u, v)|
  double forward_error = 0.0;
  /// max sextuple distance between psi(phi(p)) and p
  double backward_error = 0.0;
  /// max change of phi(p) under an equivalent representative
  double well_defined_error = 0.0;
  double tolerance = kDefaultTolerance;

  double max_error() const;
  bool passed() const { return max_error() < tolerance; }
};

/// Round trips through every coordinate chart on `samples` seeded random
/// inputs. Inputs are drawn serially; only the evaluation is parallel.
ChartRoundtripReport chart_roundtrip(int level, std::size_t samples, std::uint64_t seed,
                                     double tol = kDefaultTolerance, Execution exec = Execution::parallel);

struct EquivalenceReport {
  int level = kDefaultProjectiveLevel;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// max invariant distance between mutually derived representatives
  double max_error = 0.0;
  /// pairs from independent draws wrongly reported equivalent
  std::size_t false_positives = 0;
  /// failed reflexivity, symmetry or transitivity checks
  std::size_t relation_failures = 0;
  double tolerance = kDefaultTolerance;

  bool passed() const { return max_error < tolerance && false_positives == 0 && relation_failures == 0; }
};

EquivalenceReport equivalence_check(int level, std::size_t samples, std::uint64_t seed,
                                    double tol = kDefaultTolerance, Execution exec = Execution::parallel);

}  // namespace octo
