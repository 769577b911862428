#include <binv/locus_lab.hpp>

#include <binv/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace binv {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::billiard: return "billiard";
    case Family::focus_inversive: return "focus-inversive";
    case Family::center_inversive: return "center-inversive";
  }
  return "billiard";
}

Family parse_family(std::string_view name) {
  if (name == "billiard") return Family::billiard;
  if (name == "inversive" || name == "focus-inversive") return Family::focus_inversive;
  if (name == "center-inversive") return Family::center_inversive;
  throw ValidationError("unknown family '" + std::string(name) +
                        "' (expected billiard, inversive, center-inversive)");
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::point: return "point";
    case Verdict::circle: return "circle";
    case Verdict::ellipse: return "ellipse";
    case Verdict::non_conic: return "non-conic";
  }
  return "non-conic";
}

const std::vector<int>& theorem_circle_ids() {
  static const std::vector<int> ids = {1,  2,  3,  4,  5,  8,  9,  10, 11, 12, 20, 21, 35, 36,
                                       40, 46, 55, 56, 57, 63, 65, 73, 78, 79, 80, 84, 90, 100};
  return ids;
}

LocusSample sweep_locus(const EllipseSpec& e, const InversiveConfig& cfg, int id, Family family,
                        int grid) {
  cfg.validate();
  if (!is_supported_center(id)) {
    throw ValidationError("unsupported triangle center X(" + std::to_string(id) +
                          "); supported: " + supported_centers_text());
  }
  if (e.is_circle()) throw ValidationError("locus sweeps require a > b");
  LocusSample s;
  s.center_id = id;
  s.family = family;
  s.grid = grid;
  s.scale = e.a;
  s.t1 = sweep_grid(grid);
  s.points.resize(s.t1.size());
  parallel_for(s.t1.size(), [&](std::size_t k) {
    try {
      const Orbit orbit = three_periodic(e, s.t1[k]);
      std::vector<Point2d> v;
      switch (family) {
        case Family::billiard: v = orbit.vertices; break;
        case Family::focus_inversive: v = focus_inversive(e, orbit, cfg).vertices; break;
        case Family::center_inversive: {
          const PolygonD poly = center_inversive(orbit, cfg.rho);
          v.assign(poly.vertices().begin(), poly.vertices().end());
          break;
        }
      }
      s.points[k] = center_point(Triangle<double>(v[0], v[1], v[2]), id);
    } catch (const std::exception& err) {
      std::ostringstream msg;
      msg << "X(" << id << ") " << family_name(family) << " locus at t1=" << s.t1[k] << ": "
          << err.what();
      throw SolverError(msg.str());
    }
  });
  return s;
}

LocusClass classify_locus(const LocusSample& s, const LocusTolerances& tols) {
  LocusClass out;
  out.tols = tols;
  out.diameter = point_set_diameter(s.points);
  if (out.diameter < tols.point * s.scale) {
    out.verdict = Verdict::point;
    return out;
  }
  try {
    out.circle = fit_circle(s.points);
    out.circle_rel_rms = out.circle->radius > 0.0 ? out.circle->rms / out.circle->radius : INFINITY;
  } catch (const DegenerateGeometry&) {
    out.circle_rel_rms = INFINITY;
  }
  if (out.circle && out.circle_rel_rms < tols.circle) {
    out.verdict = Verdict::circle;
    return out;
  }
  try {
    out.conic = fit_conic(s.points);
    out.conic_rel_rms = out.conic->rms / out.diameter;
  } catch (const DegenerateGeometry&) {
    out.conic_rel_rms = INFINITY;
  }
  if (out.conic && out.conic->type == ConicType::ellipse && out.conic_rel_rms < tols.conic) {
    out.verdict = Verdict::ellipse;
    return out;
  }
  out.verdict = Verdict::non_conic;
  out.in_gap = out.conic_rel_rms <= tols.non_conic;
  return out;
}

bool has_circle_reference(int id) {
  switch (id) {
    case 1: case 2: case 3: case 4: case 5: case 9: case 11: case 100: return true;
    default: return false;
  }
}

CircleRef circle_locus_reference(const EllipseSpec& e, double rho, int id) {
  if (e.is_circle()) throw ValidationError("circle loci require a > b");
  if (!(rho > 0.0)) throw ValidationError("rho must be positive");
  const double a = e.a, b = e.b, c = e.c, d = e.delta;
  const double a2 = a * a, b2 = b * b, b4 = b2 * b2, r2 = rho * rho;
  switch (id) {
    case 1:
      return {Point2d(c * (-1 + r2 * (-2 * a2 + b2 + 2 * d) / (2 * b4)), 0),
              r2 * (-2 * d * d + b4 + (2 * a2 - b2) * d) / (2 * a * b4)};
    case 2:
      return {Point2d(-c * (1 + r2 * (2 * a2 - b2 - d) / (3 * a2 * b2)), 0),
              r2 * (2 * a2 - b2 - d) / (3 * a * b2)};
    case 3:
      return {Point2d(-c * (1 + r2 * (a2 + b2) / (2 * b4)), 0), r2 * a * (d - b2) / (2 * b4)};
    case 4:
      return {Point2d(c * (-1 + r2 * (b2 + d) * d / (a2 * b4)), 0),
              r2 * c * c * (b2 + d) / (a * b4)};
    case 5:
      return {Point2d(c * (-1 + r2 * (a2 * a2 - 3 * a2 * b2 + 2 * b4 + 2 * b2 * d) / (4 * a2 * b4)), 0),
              r2 * ((3 * a2 - 2 * b2) * b2 + (a2 - 2 * b2) * d) / (4 * a * b2)};
    case 9:
      return {Point2d(-c * (1 + r2 / (2 * b2)), 0), r2 * (2 * a2 - b2 - d) / (2 * a * b2)};
    case 11:
      return {Point2d(c * (-1 + r2 * (-a2 + b2 + d) / (2 * a2 * b2)), 0),
              r2 * (-a2 + b2 + d) / (2 * a * b2)};
    case 100:
      return {Point2d(-c * (1 + r2 / b2), 0), r2 * a / b2};
    default:
      throw ValidationError("no printed circle locus for X(" + std::to_string(id) +
                            "); available: 1,2,3,4,5,9,11,100");
  }
}

CircleMatch match_circle(const CircleFit& fit, const CircleRef& ref, double scale) {
  const MirrorChoice mc = match_mirror(fit.center, ref.center);
  CircleMatch m;
  m.mirrored = mc.mirrored;
  m.reference_center = mc.ref;
  m.reference_radius = ref.radius;
  m.center_rel_error = (fit.center - mc.ref).norm() / std::max(mc.ref.norm(), scale);
  m.radius_rel_error = std::abs(fit.radius - ref.radius) / ref.radius;
  return m;
}

namespace {

Point2d axis_extents(const ConicFit& f) {
  // Axis-aligned ellipse: the major axis lies on x when the angle is ~0.
  if (std::abs(std::sin(f.angle)) < std::abs(std::cos(f.angle))) {
    return {f.semi_major, f.semi_minor};
  }
  return {f.semi_minor, f.semi_major};
}

}  // namespace

CenterInversiveX3Report center_inversive_x3_check(const EllipseSpec& e, double rho, int grid) {
  const InversiveConfig cfg{1, rho};
  const LocusSample billiard = sweep_locus(e, cfg, 3, Family::billiard, grid);
  const LocusSample inverse = sweep_locus(e, cfg, 3, Family::center_inversive, grid);

  CenterInversiveX3Report rep;
  rep.billiard_fit = fit_conic(billiard.points);
  rep.inversive_fit = fit_conic(inverse.points);
  if (rep.billiard_fit.type != ConicType::ellipse || rep.inversive_fit.type != ConicType::ellipse) {
    throw DegenerateGeometry("X3 locus fit is not an ellipse");
  }
  rep.billiard_axes = axis_extents(rep.billiard_fit);
  rep.inversive_axes = axis_extents(rep.inversive_fit);
  rep.expected_ratio = rho * rho / e.delta;
  rep.ratio_x = rep.inversive_axes.x() / rep.billiard_axes.x();
  rep.ratio_y = rep.inversive_axes.y() / rep.billiard_axes.y();
  const CausticSpec caustic = confocal_caustic_n3(e);
  rep.aspect_product =
      (rep.inversive_axes.x() / rep.inversive_axes.y()) * (caustic.a2 / caustic.b2);
  rep.center_offset = std::max(rep.billiard_fit.center.norm(), rep.inversive_fit.center.norm());
  auto tilt = [](double ang) { return std::min(std::abs(std::sin(ang)), std::abs(std::cos(ang))); };
  rep.axis_tilt = std::max(tilt(rep.billiard_fit.angle), tilt(rep.inversive_fit.angle));

  for (std::size_t k = 0; k < billiard.t1.size(); ++k) {
    const Orbit o = three_periodic(e, billiard.t1[k]);
    const Point2d x3 = billiard.points[k];
    const double r = (o.vertices[0] - x3).norm();
    rep.max_power_error = std::max(rep.max_power_error, std::abs(x3.squaredNorm() - r * r + e.delta));
  }
  return rep;
}

SwanReport swan_check(const EllipseSpec& e, int id, const InversiveConfig& cfg, int grid,
                      const LocusTolerances& tols) {
  SwanReport rep;
  rep.id = id;
  const LocusSample billiard = sweep_locus(e, cfg, id, Family::billiard, grid);
  for (const auto& p : billiard.points) {
    rep.max_level_error = std::max(rep.max_level_error, std::abs(ellipse_level(e, p) - 1.0));
  }
  rep.inversive = classify_locus(sweep_locus(e, cfg, id, Family::focus_inversive, grid), tols);
  return rep;
}

}  // namespace binv
