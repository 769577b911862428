#pragma once

#include <binv/billiard_orbits.hpp>
#include <binv/core_geometry.hpp>

#include <vector>

namespace binv {

/// Inversion circle centered on focus f_j (f₁ = (−c, 0), f₂ = (+c, 0)).
struct InversiveConfig {
  int focus_index = 1;
  double rho = 1.0;

  void validate() const;
};

/// Image of an orbit under inversion about a focus.
///
/// `spokes[i]` is the distance d_{j,i} from the focus to the orbit vertex i;
/// the inverted vertex sits at distance ρ²/d_{j,i} from the focus.
struct InversivePolygon {
  InversiveConfig config;
  Point2d focus = Point2d::Zero();
  std::vector<Point2d> vertices;
  std::vector<double> spokes;

  PolygonD polygon() const { return PolygonD(vertices); }
};

InversivePolygon focus_inversive(const EllipseSpec& e, const Orbit& orbit, const InversiveConfig& cfg);

/// Inversion of the orbit vertices in the circle of radius rho concentric with
/// the billiard. The result is inscribed in Booth's curve.
PolygonD center_inversive(const Orbit& orbit, double rho);

/// Feet of the perpendiculars from `pivot` to each side line PᵢPᵢ₊₁. Feet may
/// coincide, so the result is a raw vertex list.
std::vector<Point2d> pedal_polygon(std::span<const Point2d> polygon, const Point2d& pivot);

struct SpokeStats {
  std::vector<double> d;
  double sum_inverse = 0.0;
};

SpokeStats spoke_stats(const EllipseSpec& e, const Orbit& orbit, int focus_index);

}  // namespace binv
