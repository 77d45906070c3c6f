#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "octo/parallel.hpp"

namespace octo {

/// Degrees of x -> b x and x -> x a for unit b, a, read off as the sign of
/// the determinant of the real multiplication matrices.
struct Bidegree {
  int left = 0;
  int right = 0;
  std::size_t samples = 0;
  /// max ||det| - 1| over every sampled matrix
  double max_det_deviation = 0.0;
};

inline constexpr double kDeterminantTolerance = 1e-6;

/// Real 2^level x 2^level matrix of x -> b x (column j is b e_j).
std::vector<double> left_multiplication_matrix(std::span<const double> b, int level);
/// Real matrix of x -> x a.
std::vector<double> right_multiplication_matrix(std::span<const double> a, int level);

/// Levels 0..3. Throws Inconsistency when a determinant leaves
/// 1 +- kDeterminantTolerance in magnitude or changes sign across samples.
Bidegree multiplication_bidegree(int level, std::size_t samples, std::uint64_t seed);

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Polygon3 = std::vector<Vec3>;

/// Closed fiber of the complex Hopf map over s in S^2, as `segments`
/// vertices (x u, y u), u = exp(i theta), in S^3 subset R^4.
std::vector<Vec4> hopf_fiber(const Vec3& s, std::size_t segments);

/// Stereographic projection of S^3 minus `pole` onto R^3. The frame of the
/// pole's tangent space is chosen with a fixed orientation so that the sign
/// of a linking number does not depend on the pole.
Polygon3 stereographic_projection(std::span<const Vec4> points, const Vec4& pole);

/// Point of S^3 maximizing the minimum distance to the given points, among
/// a fixed seeded candidate set.
Vec4 pole_away_from(std::span<const Vec4> a, std::span<const Vec4> b);

/// Gauss linking number of two closed polygons, summed exactly over segment
/// pairs as signed solid angles / (4 pi).
double gauss_linking_number(const Polygon3& a, const Polygon3& b, Execution exec = Execution::parallel);

struct LinkingSample {
  Vec3 first;
  Vec3 second;
  double raw = 0.0;
  int linking = 0;
};

struct LinkingReport {
  int hopf_invariant = 0;
  std::size_t segments = 0;
  std::vector<LinkingSample> pairs;
};

inline constexpr std::size_t kMinSegments = 64;
inline constexpr double kMinRegularValueSeparation = 0.1;

/// Linking number of the fibers over two points of S^2.
LinkingSample fiber_linking(const Vec3& first, const Vec3& second, std::size_t segments,
                            Execution exec = Execution::parallel);

/// Hopf invariant of the complex Hopf map as the linking number of fibers
/// over `samples` seeded pairs of regular values. Pairs closer than
/// kMinRegularValueSeparation radians are redrawn. Throws GeometryError if
/// a raw linking number is not near an integer or the pairs disagree.
LinkingReport linking_hopf_invariant(std::size_t samples, std::size_t segments, std::uint64_t seed,
                                     Execution exec = Execution::parallel);

}  // namespace octo
