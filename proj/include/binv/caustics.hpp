#pragma once

#include <binv/billiard_orbits.hpp>
#include <binv/inversive_family.hpp>

#include <vector>

namespace binv {

struct Line2 {
  Point2d point = Point2d::Zero();
  Point2d direction = Point2d::UnitX();
};

/// One line per parameter value, e.g. side k of a moving polygon.
struct LineFamily {
  std::vector<double> params;
  std::vector<Line2> lines;
  /// The last line is followed by the first (a closed one-turn sweep).
  bool periodic = true;
};

struct EnvelopePoint {
  Point2d point = Point2d::Zero();
  /// Midpoint parameter of the pair the point was computed from.
  double param = 0.0;
  /// Near-parallel consecutive lines: no finite envelope point here.
  bool gap = false;
};

/// Family of tangents to a circle, the textbook check of the envelope code.
LineFamily circle_tangent_family(const Point2d& center, double radius, int samples);

/// Side `side` (P_side → P_side+1) of the polygon family swept over t1.
LineFamily billiard_side_family(const EllipseSpec& e, int n, int samples, int side = 0);
LineFamily focus_inversive_side_family(const EllipseSpec& e, const InversiveConfig& cfg, int samples,
                                       int side = 0);
LineFamily center_inversive_side_family(const EllipseSpec& e, double rho, int samples, int side = 0);

/// Envelope points from consecutive-line intersections, Richardson-corrected
/// with the pair one step further out on each side. Requires ≥ 64 lines.
std::vector<EnvelopePoint> envelope_sample(const LineFamily& f);

/// Non-gap points of an envelope.
std::vector<Point2d> envelope_points(const std::vector<EnvelopePoint>& env);

/// (u, v) with ux + vy = 1 for the line. Throws LineThroughCenter when the
/// line passes through the origin.
Point2d line_coordinates(const Line2& line);

/// a″²u² + b″²v² − 1, zero iff the line ux + vy = 1 touches the caustic.
double tangency_residual(const Point2d& uv, const CausticSpec& caustic);
double tangency_residual(const Line2& line, const CausticSpec& caustic);

}  // namespace binv
