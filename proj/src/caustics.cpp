#include <binv/caustics.hpp>

#include <binv/invariant_lab.hpp>
#include <binv/parallel.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace binv {

namespace {

constexpr double kParallelTol = 1e-10;

template <typename VerticesAt>
LineFamily polygon_side_family(int n, int samples, int side, VerticesAt&& vertices_at) {
  if (samples < 2) throw ValidationError("line family needs at least 2 samples");
  if (side < 0 || side >= n) throw ValidationError("side index out of range");
  LineFamily f;
  f.params.resize(samples);
  f.lines.resize(samples);
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / samples;
    f.params[k] = t;
    try {
      const std::vector<Point2d> v = vertices_at(t);
      const Point2d& p = v[side];
      const Point2d& q = v[(side + 1) % v.size()];
      f.lines[k] = Line2{p, q - p};
    } catch (const std::exception& err) {
      std::ostringstream msg;
      msg << "side family at t1=" << t << ": " << err.what();
      throw SolverError(msg.str());
    }
  });
  return f;
}

std::optional<Point2d> intersect(const Line2& l1, const Line2& l2) {
  const double den = cross<double>(l1.direction, l2.direction);
  if (std::abs(den) < kParallelTol * l1.direction.norm() * l2.direction.norm()) return std::nullopt;
  const double s = cross<double>(l2.point - l1.point, l2.direction) / den;
  return l1.point + s * l1.direction;
}

}  // namespace

LineFamily circle_tangent_family(const Point2d& center, double radius, int samples) {
  if (!(radius > 0.0)) throw ValidationError("radius must be positive");
  if (samples < 2) throw ValidationError("line family needs at least 2 samples");
  LineFamily f;
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / samples;
    const Point2d u(std::cos(t), std::sin(t));
    f.params.push_back(t);
    f.lines.push_back(Line2{center + radius * u, Point2d(-u.y(), u.x())});
  }
  return f;
}

LineFamily billiard_side_family(const EllipseSpec& e, int n, int samples, int side) {
  if (n < 3) throw ValidationError("polygon families need n >= 3");
  return polygon_side_family(n, samples, side,
                             [&](double t) { return family_orbit(e, n, t).vertices; });
}

LineFamily focus_inversive_side_family(const EllipseSpec& e, const InversiveConfig& cfg, int samples,
                                       int side) {
  cfg.validate();
  return polygon_side_family(3, samples, side, [&](double t) {
    return focus_inversive(e, three_periodic(e, t), cfg).vertices;
  });
}

LineFamily center_inversive_side_family(const EllipseSpec& e, double rho, int samples, int side) {
  return polygon_side_family(3, samples, side, [&](double t) {
    const PolygonD poly = center_inversive(three_periodic(e, t), rho);
    return std::vector<Point2d>(poly.vertices().begin(), poly.vertices().end());
  });
}

std::vector<EnvelopePoint> envelope_sample(const LineFamily& f) {
  const int m = static_cast<int>(f.lines.size());
  if (m < 64) throw ValidationError("envelope sampling needs at least 64 lines");
  if (f.params.size() != f.lines.size()) throw ValidationError("params and lines differ in length");
  for (const auto& l : f.lines) {
    if (!(l.direction.norm() > 0.0)) throw ValidationError("line direction must be nonzero");
  }

  auto at = [&](int k) -> const Line2* {
    if (f.periodic) return &f.lines[((k % m) + m) % m];
    return (k >= 0 && k < m) ? &f.lines[k] : nullptr;
  };

  const int pairs = f.periodic ? m : m - 1;
  std::vector<EnvelopePoint> out(pairs);
  for (int k = 0; k < pairs; ++k) {
    EnvelopePoint& ep = out[k];
    const double t0 = f.params[k];
    double t1 = f.params[(k + 1) % m];
    if (f.periodic && k + 1 == m) t1 += 2.0 * std::numbers::pi;
    ep.param = 0.5 * (t0 + t1);
    const auto near = intersect(*at(k), *at(k + 1));
    if (!near) {
      ep.gap = true;
      continue;
    }
    ep.point = *near;
    // Lines k−1 and k+2 share the midpoint but span 3 steps: error ×9.
    const Line2* lo = at(k - 1);
    const Line2* hi = at(k + 2);
    if (lo && hi) {
      if (const auto wide = intersect(*lo, *hi)) ep.point = (9.0 * *near - *wide) / 8.0;
    }
  }
  return out;
}

std::vector<Point2d> envelope_points(const std::vector<EnvelopePoint>& env) {
  std::vector<Point2d> pts;
  for (const auto& ep : env) {
    if (!ep.gap) pts.push_back(ep.point);
  }
  return pts;
}

Point2d line_coordinates(const Line2& line) {
  const Point2d normal(-line.direction.y(), line.direction.x());
  const double h = normal.dot(line.point);
  if (std::abs(h) <= 1e-14 * normal.norm() * std::max(1.0, line.point.norm())) {
    throw LineThroughCenter("line passes through the origin; no ux + vy = 1 form");
  }
  return normal / h;
}

double tangency_residual(const Point2d& uv, const CausticSpec& caustic) {
  return caustic.a2 * caustic.a2 * uv.x() * uv.x() + caustic.b2 * caustic.b2 * uv.y() * uv.y() - 1.0;
}

double tangency_residual(const Line2& line, const CausticSpec& caustic) {
  return tangency_residual(line_coordinates(line), caustic);
}

}  // namespace binv
