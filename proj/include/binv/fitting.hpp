#pragma once

#include <binv/core_geometry.hpp>

#include <Eigen/Core>

#include <span>
#include <string_view>

namespace binv {

struct CircleFit {
  Point2d center = Point2d::Zero();
  double radius = 0.0;
  /// Root mean square of |dist − radius|.
  double rms = 0.0;
};

enum class ConicType { ellipse, parabola, hyperbola, degenerate };

std::string_view conic_type_name(ConicType t);

/// Ax² + Bxy + Cy² + Dx + Ey + F = 0 with (A..F) of unit norm.
struct ConicFit {
  Eigen::Matrix<double, 6, 1> coeffs = Eigen::Matrix<double, 6, 1>::Zero();
  ConicType type = ConicType::degenerate;
  // Populated only for real ellipses.
  Point2d center = Point2d::Zero();
  double semi_major = 0.0;
  double semi_minor = 0.0;
  /// Direction of the major axis, radians in (−π/2, π/2].
  double angle = 0.0;
  /// Root mean square Sampson distance (first-order geometric distance).
  double rms = 0.0;
};

/// Kåsa algebraic fit refined by one Gauss–Newton step on the geometric error.
CircleFit fit_circle(std::span<const Point2d> points);

/// Least-squares conic through ≥ 6 points, solved by SVD in normalized
/// coordinates.
ConicFit fit_conic(std::span<const Point2d> points);

/// Largest pairwise distance (exact, O(n²)).
double point_set_diameter(std::span<const Point2d> points);

}  // namespace binv
