#include <binv/inversive_family.hpp>

#include <cmath>

namespace binv {

void InversiveConfig::validate() const {
  if (focus_index != 1 && focus_index != 2) {
    throw ValidationError("focus index must be 1 or 2");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ValidationError("inversion radius must be finite and positive");
  }
}

InversivePolygon focus_inversive(const EllipseSpec& e, const Orbit& orbit, const InversiveConfig& cfg) {
  cfg.validate();
  if (e.is_circle()) {
    throw ValidationError("focus inversion needs a > b (foci distinct from the center)");
  }
  InversivePolygon out;
  out.config = cfg;
  out.focus = focus(e, cfg.focus_index);
  const CircleSpec k = make_circle(out.focus, cfg.rho);
  out.vertices.reserve(orbit.vertices.size());
  out.spokes.reserve(orbit.vertices.size());
  for (const Point2d& p : orbit.vertices) {
    out.spokes.push_back((p - out.focus).norm());
    out.vertices.push_back(invert_point(p, k));
  }
  return out;
}

PolygonD center_inversive(const Orbit& orbit, double rho) {
  const CircleSpec k = make_circle<double>(Point2d::Zero(), rho);
  std::vector<Point2d> v;
  v.reserve(orbit.vertices.size());
  for (const Point2d& p : orbit.vertices) v.push_back(invert_point(p, k));
  return PolygonD(std::move(v));
}

std::vector<Point2d> pedal_polygon(std::span<const Point2d> polygon, const Point2d& pivot) {
  const std::size_t n = polygon.size();
  std::vector<Point2d> feet;
  feet.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2d& p = polygon[i];
    const Point2d side = polygon[(i + 1) % n] - p;
    const double len2 = side.squaredNorm();
    if (!(len2 > 0.0)) throw DegenerateGeometry("pedal polygon: zero-length side");
    feet.push_back(p + ((pivot - p).dot(side) / len2) * side);
  }
  return feet;
}

SpokeStats spoke_stats(const EllipseSpec& e, const Orbit& orbit, int focus_index) {
  const Point2d f = focus(e, focus_index);
  SpokeStats s;
  s.d.reserve(orbit.vertices.size());
  for (const Point2d& p : orbit.vertices) {
    const double d = (p - f).norm();
    s.d.push_back(d);
    s.sum_inverse += 1.0 / d;
  }
  return s;
}

}  // namespace binv
