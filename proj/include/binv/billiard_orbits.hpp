#pragma once

#include <binv/core_geometry.hpp>

#include <vector>

namespace binv {

/// An N-periodic billiard trajectory with winding number 1.
///
/// `params` are boundary parameters in strictly increasing order starting at
/// t₁ and spanning less than 2π; `j_values` holds ½∇f·v̂ at every bounce with
/// v̂ the unit incoming direction.
struct Orbit {
  int n = 0;
  std::vector<double> params;
  std::vector<Point2d> vertices;
  std::vector<double> j_values;
  double max_residual = 0.0;

  PolygonD polygon() const { return PolygonD(vertices); }
  /// Relative spread (max − min)/mean of the per-vertex Joachimsthal values.
  double j_spread() const;
};

/// Confocal caustic x²/a2² + y²/b2² = 1.
struct CausticSpec {
  double a2 = 0.0;
  double b2 = 0.0;
};

struct SolverOptions {
  double tolerance = 1e-12;
  int max_iterations = 50;
  double fd_step = 1e-7;
};

/// Closed-form 3-periodic with first vertex at ellipse_point(e, t1). The
/// orientation branch is fixed so the vertices run counterclockwise.
Orbit three_periodic(const EllipseSpec& e, double t1);

/// Caustic of the 3-periodic family.
CausticSpec confocal_caustic_n3(const EllipseSpec& e);

/// Per-vertex ½∇f(Pᵢ)·v̂ᵢ for a closed polygon inscribed in the ellipse.
std::vector<double> joachimsthal_values(const EllipseSpec& e, std::span<const Point2d> vertices);

/// Mean Joachimsthal value of an orbit; throws SolverError when the relative
/// spread exceeds 1e-8 (the input is not a billiard orbit).
double joachimsthal(const EllipseSpec& e, const Orbit& orbit);

struct JoachimsthalPerimeter {
  double j = 0.0;
  double l = 0.0;
};

/// J = √(2δ − a² − b²)/c², L = 2(δ + a² + b²)J for 3-periodics (a > b).
JoachimsthalPerimeter n3_closed_form_jl(const EllipseSpec& e);

/// J = √(a² − a″²)/(ab) from the caustic major semiaxis a″ ∈ (0, a).
double stachel_j(const EllipseSpec& e, double caustic_a);

/// Inverse of stachel_j: a″ = a√(1 − b²J²).
double caustic_a_from_j(const EllipseSpec& e, double j);

/// Confocal caustic recovered from a measured Joachimsthal constant.
CausticSpec caustic_from_j(const EllipseSpec& e, double j);

/// Reflection-law residual at ellipse_point(e, t): the sum of the unit chords
/// towards the neighbours projected on the unit tangent. Zero iff the incoming
/// and outgoing chords make equal angles with the tangent.
double reflection_residual(const EllipseSpec& e, double t_prev, double t, double t_next);

/// General-N periodic orbit through ellipse_point(e, t1), winding number 1.
Orbit solve_nperiodic(const EllipseSpec& e, int n, double t1, const SolverOptions& opts = {});

}  // namespace binv
