#include <binv/invariant_lab.hpp>

#include <binv/parallel.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace binv {

namespace {

void require_grid(int grid) {
  if (grid < 16) throw ValidationError("grid must be at least 16 samples");
}

[[noreturn]] void rethrow_at(double t1, const std::exception& err) {
  std::ostringstream msg;
  msg << "at t1=" << t1 << ": " << err.what();
  throw SolverError(msg.str());
}

Point2d mean_point(const std::vector<Point2d>& pts) {
  Point2d m = Point2d::Zero();
  for (const auto& p : pts) m += p;
  return m / static_cast<double>(pts.size());
}

// Per-sample measurements; the N = 3-only fields stay empty for larger N.
struct Sample {
  double perimeter = 0.0;
  double distance_sum = 0.0;
  double sum_inv = 0.0;
  double sum_cos = 0.0;
  double area_product = 0.0;
  double pedal_gap = 0.0;
  Point2d x7 = Point2d::Zero();
  Point2d x9 = Point2d::Zero();
  double semi_major = 0.0;
  double semi_minor = 0.0;
};

}  // namespace

double InvariantTrace::rel_std() const {
  return std::abs(mean) > 0.0 ? std / std::abs(mean) : std;
}

std::optional<double> InvariantTrace::rel_error() const {
  if (!closed_form) return std::nullopt;
  const double err = std::abs(mean - *closed_form);
  return std::abs(*closed_form) > 0.0 ? err / std::abs(*closed_form) : err;
}

InvariantTrace make_trace(std::string name, std::vector<double> t1, std::vector<double> values,
                          std::optional<double> closed_form) {
  if (values.empty()) throw ValidationError("trace '" + name + "' has no samples");
  InvariantTrace tr;
  tr.name = std::move(name);
  tr.t1 = std::move(t1);
  tr.values = std::move(values);
  tr.closed_form = closed_form;
  const double n = static_cast<double>(tr.values.size());
  tr.mean = std::accumulate(tr.values.begin(), tr.values.end(), 0.0) / n;
  double acc = 0.0;
  for (double v : tr.values) {
    acc += (v - tr.mean) * (v - tr.mean);
    tr.max_abs_dev = std::max(tr.max_abs_dev, std::abs(v - tr.mean));
  }
  tr.std = std::sqrt(acc / n);
  return tr;
}

ClosedFormRefs closed_form_refs(const EllipseSpec& e, double rho) {
  if (e.is_circle()) throw ValidationError("closed forms require a > b");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ValidationError("rho must be finite and positive");
  const double a = e.a, b = e.b, c = e.c, d = e.delta;
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const double a4 = a2 * a2, b4 = b2 * b2, a6 = a4 * a2, b6 = b4 * b2, a8 = a4 * a4;
  const double r2 = rho * rho;

  ClosedFormRefs r;
  const double s = (8 * a4 + 4 * a2 * b2 + 2 * b4) * d + 8 * a6 + 3 * a2 * b4 + 2 * b6;
  r.k2 = 2 * a2 - b2 - d;
  if (!(r.k2 > 0.0)) throw DegenerateGeometry("k2 = 2a^2 - b^2 - delta must be positive");
  r.k3 = 2 * a * b2 * ((2 * a2 - b2) * d + 2 * a4 - 2 * a2 * b2 - b4);
  r.k1 = c * std::numbers::sqrt2 / r.k3 * std::sqrt(s);
  // Both semiaxes scale with ρ² (a similarity of the inversive family).
  r.a_dagger = r2 * r.k1 * std::sqrt(r.k2 * (d + a * c));
  r.b_dagger = r2 * r.k1 * std::sqrt(r.k2 * (d - a * c));
  r.L_dagger = r2 * std::sqrt(s) / (a2 * b2);
  r.sum_inv_spokes = (a2 + b2 + d) / (a * b2);
  r.sum_cosines = d * (a2 + c2 - d) / (a2 * c2);
  r.area_product = std::pow(rho, 8) / (8 * a8 * b2) *
                   ((a4 + 2 * a2 * b2 + 4 * b4) * d + a6 + 1.5 * a4 * b2 + 4 * b6);
  r.X7_dagger = Point2d(c * (1 - r2 / (d + c2)), 0.0);
  r.X7_ddagger = Point2d(d / c, 0.0);
  r.C9_dagger = Point2d(-c * (1 + r2 / (2 * b2)), 0.0);
  r.R9_dagger = r2 * r.k2 / (2 * a * b2);
  r.C9_ddagger = Point2d(-(a2 + b2) / c, 0.0);
  return r;
}

std::vector<double> sweep_grid(int grid) {
  require_grid(grid);
  std::vector<double> t(grid);
  for (int k = 0; k < grid; ++k) t[k] = 2.0 * std::numbers::pi * k / grid;
  return t;
}

Orbit family_orbit(const EllipseSpec& e, int n, double t1) {
  if (n == 3 && !e.is_circle()) {
    // The closed form cancels badly as c → 0; the shooting solver does not.
    try {
      return three_periodic(e, t1);
    } catch (const SolverError&) {
    }
  }
  return solve_nperiodic(e, n, t1);
}

MirrorChoice match_mirror(const Point2d& measured, const Point2d& ref) {
  const Point2d flipped(-ref.x(), ref.y());
  if ((measured - flipped).norm() < (measured - ref).norm()) return {flipped, true};
  return {ref, false};
}

CenteredConic circumbilliard(const Triangle<double>& t) {
  const Point2d m = center_point(t, 9);
  // A x² + 2B xy + C y² = 1 in coordinates relative to X₉.
  Eigen::Matrix3d sys;
  for (int i = 0; i < 3; ++i) {
    const Point2d q = t.vertex(i) - m;
    sys.row(i) << q.x() * q.x(), 2 * q.x() * q.y(), q.y() * q.y();
  }
  Eigen::FullPivLU<Eigen::Matrix3d> lu(sys);
  if (!lu.isInvertible()) throw DegenerateGeometry("circumconic centered at X9 is degenerate");
  const Eigen::Vector3d abc = lu.solve(Eigen::Vector3d::Ones());
  Eigen::Matrix2d q;
  q << abc(0), abc(1), abc(1), abc(2);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(q);
  const Eigen::Vector2d lam = eig.eigenvalues();  // ascending
  if (!(lam(0) > 0.0)) {
    throw DegenerateGeometry(lam(0) < 0.0 && lam(1) > 0.0
                                 ? "circumconic centered at X9 is a hyperbola"
                                 : "circumconic centered at X9 is not a real ellipse");
  }
  CenteredConic out;
  out.center = m;
  out.semi_major = 1.0 / std::sqrt(lam(0));
  out.semi_minor = 1.0 / std::sqrt(lam(1));
  const Eigen::Vector2d dir = eig.eigenvectors().col(0);
  double ang = std::atan2(dir.y(), dir.x());
  if (ang <= -std::numbers::pi / 2) ang += std::numbers::pi;
  if (ang > std::numbers::pi / 2) ang -= std::numbers::pi;
  out.angle = ang;
  return out;
}

std::vector<InvariantTrace> sweep_family(const EllipseSpec& e, const InversiveConfig& cfg, int n,
                                         int grid) {
  cfg.validate();
  if (n < 3) throw ValidationError("n must be at least 3");
  if (e.is_circle()) throw ValidationError("focus-inversive families require a > b");
  const std::vector<double> ts = sweep_grid(grid);
  const bool tri = (n == 3);
  const InversiveConfig other{3 - cfg.focus_index, cfg.rho};

  std::vector<Sample> samples(ts.size());
  parallel_for(ts.size(), [&](std::size_t k) {
    try {
      const Orbit orbit = family_orbit(e, n, ts[k]);
      const InversivePolygon inv = focus_inversive(e, orbit, cfg);
      const InversivePolygon inv2 = focus_inversive(e, orbit, other);
      const PolygonD poly = inv.polygon();
      Sample& s = samples[k];
      s.perimeter = perimeter(poly);
      for (const auto& p : inv.vertices) s.distance_sum += (p - inv.focus).norm();
      s.sum_inv = spoke_stats(e, orbit, cfg.focus_index).sum_inverse;
      for (double cth : interior_cosines(poly)) s.sum_cos += cth;
      s.area_product = std::abs(signed_area(inv.vertices)) * std::abs(signed_area(inv2.vertices));
      s.pedal_gap = signed_area(pedal_polygon(inv.vertices, inv.focus)) -
                    signed_area(pedal_polygon(inv2.vertices, inv2.focus));
      if (tri) {
        const Triangle<double> t(inv.vertices[0], inv.vertices[1], inv.vertices[2]);
        s.x7 = center_point(t, 7);
        s.x9 = center_point(t, 9);
        const CenteredConic cb = circumbilliard(t);
        s.semi_major = cb.semi_major;
        s.semi_minor = cb.semi_minor;
      }
    } catch (const std::exception& err) {
      rethrow_at(ts[k], err);
    }
  });

  auto column = [&](auto field) {
    std::vector<double> v(samples.size());
    std::transform(samples.begin(), samples.end(), v.begin(), field);
    return v;
  };

  std::optional<ClosedFormRefs> refs;
  if (tri) refs = closed_form_refs(e, cfg.rho);
  auto cf = [&](double ClosedFormRefs::*m) -> std::optional<double> {
    if (!refs) return std::nullopt;
    return (*refs).*m;
  };

  std::vector<InvariantTrace> out;
  out.push_back(make_trace("L_dagger", ts, column([](const Sample& s) { return s.perimeter; }),
                           cf(&ClosedFormRefs::L_dagger)));
  std::optional<double> dist_ref;
  if (refs) dist_ref = cfg.rho * cfg.rho * refs->sum_inv_spokes;
  out.push_back(make_trace("distance_sum", ts, column([](const Sample& s) { return s.distance_sum; }),
                           dist_ref));
  out.push_back(make_trace("sum_inv_spokes", ts, column([](const Sample& s) { return s.sum_inv; }),
                           cf(&ClosedFormRefs::sum_inv_spokes)));
  out.push_back(make_trace("sum_cosines", ts, column([](const Sample& s) { return s.sum_cos; }),
                           cf(&ClosedFormRefs::sum_cosines)));
  out.push_back(make_trace("area_product", ts, column([](const Sample& s) { return s.area_product; }),
                           cf(&ClosedFormRefs::area_product)));
  out.push_back(make_trace("pedal_area_gap", ts, column([](const Sample& s) { return s.pedal_gap; }),
                           tri ? std::optional<double>(0.0) : std::nullopt));
  if (!tri) {
    for (auto& tr : out) tr.conjecture = true;
    return out;
  }

  std::vector<Point2d> x7(samples.size()), x9(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    x7[k] = samples[k].x7;
    x9[k] = samples[k].x9;
  }
  const MirrorChoice m7 = match_mirror(mean_point(x7), refs->X7_dagger);
  auto tx = make_trace("X7_dagger.x", ts, column([](const Sample& s) { return s.x7.x(); }), m7.ref.x());
  auto ty = make_trace("X7_dagger.y", ts, column([](const Sample& s) { return s.x7.y(); }), m7.ref.y());
  tx.mirrored = ty.mirrored = m7.mirrored;
  out.push_back(std::move(tx));
  out.push_back(std::move(ty));

  const MirrorChoice m9 = match_mirror(mean_point(x9), refs->C9_dagger);
  std::vector<double> r9(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) r9[k] = (x9[k] - m9.ref).norm();
  auto tr9 = make_trace("X9_dagger_radius", ts, std::move(r9), refs->R9_dagger);
  tr9.mirrored = m9.mirrored;
  out.push_back(std::move(tr9));

  out.push_back(make_trace("a_dagger", ts, column([](const Sample& s) { return s.semi_major; }),
                           refs->a_dagger));
  out.push_back(make_trace("b_dagger", ts, column([](const Sample& s) { return s.semi_minor; }),
                           refs->b_dagger));
  return out;
}

const InvariantTrace& find_trace(const std::vector<InvariantTrace>& traces, const std::string& name) {
  for (const auto& tr : traces) {
    if (tr.name == name) return tr;
  }
  throw std::out_of_range("no trace named '" + name + "'");
}

RotatingBilliardReport verify_rotating_billiard(const EllipseSpec& e, double rho, int grid) {
  const ClosedFormRefs refs = closed_form_refs(e, rho);
  const std::vector<double> ts = sweep_grid(grid);
  const InversiveConfig cfg{1, rho};

  struct Row {
    double j_mean = 0.0;
    double j_spread = 0.0;
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double perimeter = 0.0;
    Point2d center = Point2d::Zero();
  };
  std::vector<Row> rows(ts.size());
  parallel_for(ts.size(), [&](std::size_t k) {
    try {
      const Orbit orbit = three_periodic(e, ts[k]);
      const InversivePolygon inv = focus_inversive(e, orbit, cfg);
      const Triangle<double> tri(inv.vertices[0], inv.vertices[1], inv.vertices[2]);
      const CenteredConic cb = circumbilliard(tri);
      const Eigen::Matrix2d rot = Eigen::Rotation2Dd(cb.angle).toRotationMatrix();
      std::vector<Point2d> local;
      for (const auto& p : inv.vertices) local.push_back(rot.transpose() * (p - cb.center));
      const EllipseSpec frame = make_ellipse(cb.semi_major, std::min(cb.semi_minor, cb.semi_major));
      const std::vector<double> j = joachimsthal_values(frame, local);
      Row& r = rows[k];
      r.j_mean = (j[0] + j[1] + j[2]) / 3.0;
      r.j_spread = (*std::max_element(j.begin(), j.end()) - *std::min_element(j.begin(), j.end())) /
                   std::abs(r.j_mean);
      r.semi_major = cb.semi_major;
      r.semi_minor = cb.semi_minor;
      r.perimeter = perimeter(local);
      r.center = cb.center;
    } catch (const std::exception& err) {
      rethrow_at(ts[k], err);
    }
  });

  RotatingBilliardReport rep;
  rep.grid = grid;
  std::vector<double> jm, sa, sb, per;
  std::vector<Point2d> centers;
  for (const Row& r : rows) {
    rep.max_vertex_spread = std::max(rep.max_vertex_spread, r.j_spread);
    jm.push_back(r.j_mean);
    sa.push_back(r.semi_major);
    sb.push_back(r.semi_minor);
    per.push_back(r.perimeter);
    centers.push_back(r.center);
  }
  const auto [lo, hi] = std::minmax_element(jm.begin(), jm.end());
  rep.j_mean = std::accumulate(jm.begin(), jm.end(), 0.0) / jm.size();
  rep.sweep_spread = (*hi - *lo) / std::abs(rep.j_mean);
  rep.semi_major = make_trace("circumbilliard_a", ts, std::move(sa), refs.a_dagger);
  rep.semi_minor = make_trace("circumbilliard_b", ts, std::move(sb), refs.b_dagger);
  rep.perimeter = make_trace("circumbilliard_frame_perimeter", ts, std::move(per), refs.L_dagger);
  rep.center_fit = fit_circle(centers);
  const MirrorChoice mc = match_mirror(rep.center_fit.center, refs.C9_dagger);
  rep.center_ref = mc.ref;
  rep.center_mirrored = mc.mirrored;
  rep.radius_ref = refs.R9_dagger;
  return rep;
}

}  // namespace binv
