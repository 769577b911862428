#include <binv/billiard_orbits.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace binv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_positive(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

void require_non_circle(const EllipseSpec& e, const char* what) {
  if (e.is_circle()) {
    std::ostringstream msg;
    msg << what << " requires a > b; use solve_nperiodic for circles";
    throw ValidationError(msg.str());
  }
}

Orbit finish_orbit(const EllipseSpec& e, std::vector<double> params) {
  Orbit o;
  o.n = static_cast<int>(params.size());
  o.params = std::move(params);
  o.vertices.reserve(o.params.size());
  for (double t : o.params) o.vertices.push_back(ellipse_point(e, t));
  o.j_values = joachimsthal_values(e, o.vertices);
  const std::size_t n = o.params.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = reflection_residual(e, o.params[(i + n - 1) % n], o.params[i],
                                         o.params[(i + 1) % n]);
    o.max_residual = std::max(o.max_residual, std::abs(r));
  }
  return o;
}

struct ShotResult {
  double advance = 0.0;
  std::vector<double> params;
};

// Launch from ellipse_point(e, t1) at angle phi from the forward tangent and
// follow n bounces, accumulating the (unwrapped) parameter advance.
ShotResult shoot(const EllipseSpec& e, int n, double t1, double phi) {
  const Point2d tangent = ellipse_tangent(e, t1);
  const Point2d inward(-tangent.y(), tangent.x());
  Point2d dir = std::cos(phi) * tangent + std::sin(phi) * inward;
  Point2d p = ellipse_point(e, t1);
  const double ia2 = 1.0 / (e.a * e.a);
  const double ib2 = 1.0 / (e.b * e.b);

  ShotResult shot;
  shot.params.reserve(n);
  shot.params.push_back(t1);
  double t = t1;
  for (int k = 0; k < n; ++k) {
    const double qa = dir.x() * dir.x() * ia2 + dir.y() * dir.y() * ib2;
    const double qb = 2.0 * (p.x() * dir.x() * ia2 + p.y() * dir.y() * ib2);
    p += (-qb / qa) * dir;
    const double t_next = ellipse_parameter(e, p);
    shot.advance += wrap_positive(t_next - t);
    t = t_next;
    if (k + 1 < n) shot.params.push_back(t1 + shot.advance);
    const Point2d g = ellipse_gradient(e, p).normalized();
    dir -= 2.0 * dir.dot(g) * g;
  }
  return shot;
}

// Bisect the launch angle so that n bounces advance the parameter by exactly
// one turn. The n-bounce advance grows monotonically with the launch angle.
std::vector<double> shooting_seed(const EllipseSpec& e, int n, double t1) {
  double lo = 0.0;
  double hi = 0.5 * std::numbers::pi;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (shoot(e, n, t1, mid).advance < kTwoPi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return shoot(e, n, t1, 0.5 * (lo + hi)).params;
}

}  // namespace

double Orbit::j_spread() const {
  if (j_values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(j_values.begin(), j_values.end());
  const double mean = std::accumulate(j_values.begin(), j_values.end(), 0.0) / j_values.size();
  return (*hi - *lo) / std::abs(mean);
}

Orbit three_periodic(const EllipseSpec& e, double t1) {
  require_non_circle(e, "three_periodic");
  if (!std::isfinite(t1)) throw ValidationError("t1 must be finite");

  const double a = e.a, b = e.b;
  const double a2 = a * a, b2 = b * b;
  const double a4 = a2 * a2, b4 = b2 * b2;
  const double a6 = a4 * a2, b6 = b4 * b2;
  const double c2 = a2 - b2;
  const double d1 = a2 * b2 / c2;
  const double dl1 = std::sqrt(2.0 * e.delta - a2 - b2);

  const Point2d p1 = ellipse_point(e, t1);
  const double x1 = p1.x(), y1 = p1.y();
  const double d2 = b4 * x1 * x1 + a4 * y1 * y1;
  // k1 = cos²α, k2 = sin α cos α, α the angle of the first chord to the normal.
  const double k1 = d1 * d1 * dl1 * dl1 / d2;
  const double k2_abs = dl1 * d1 * std::sqrt(std::max(0.0, d2 - d1 * d1 * dl1 * dl1)) / d2;

  auto vertices_for = [&](double k2) {
    const double x2 = -b4 * ((a2 + b2) * k1 - a2) * x1 * x1 * x1 -
                      2.0 * a4 * b2 * k2 * x1 * x1 * y1 +
                      a4 * ((a2 - 3.0 * b2) * k1 + b2) * x1 * y1 * y1 - 2.0 * a6 * k2 * y1 * y1 * y1;
    const double y2 = 2.0 * b6 * k2 * x1 * x1 * x1 + b4 * ((b2 - 3.0 * a2) * k1 + a2) * x1 * x1 * y1 +
                      2.0 * a2 * b4 * k2 * x1 * y1 * y1 - a4 * ((a2 + b2) * k1 - b2) * y1 * y1 * y1;
    const double q2 = b4 * (a2 - c2 * k1) * x1 * x1 + a4 * (b2 + c2 * k1) * y1 * y1 -
                      2.0 * a2 * b2 * c2 * k2 * x1 * y1;
    const double x3 = b4 * (a2 - (a2 + b2) * k1) * x1 * x1 * x1 + 2.0 * a4 * b2 * k2 * x1 * x1 * y1 +
                      a4 * (k1 * (a2 - 3.0 * b2) + b2) * x1 * y1 * y1 + 2.0 * a6 * k2 * y1 * y1 * y1;
    const double y3 = -2.0 * b6 * k2 * x1 * x1 * x1 + b4 * (a2 + (b2 - 3.0 * a2) * k1) * x1 * x1 * y1 -
                      2.0 * a2 * b4 * k2 * x1 * y1 * y1 + a4 * (b2 - (a2 + b2) * k1) * y1 * y1 * y1;
    const double q3 = b4 * (a2 - c2 * k1) * x1 * x1 + a4 * (b2 + c2 * k1) * y1 * y1 +
                      2.0 * a2 * b2 * c2 * k2 * x1 * y1;
    return std::vector<Point2d>{p1, Point2d(x2 / q2, y2 / q2), Point2d(x3 / q3, y3 / q3)};
  };

  std::vector<Point2d> v = vertices_for(k2_abs);
  if (signed_area(v) < 0.0) v = vertices_for(-k2_abs);

  std::vector<double> params{t1};
  for (int i = 1; i < 3; ++i) {
    params.push_back(t1 + wrap_positive(ellipse_parameter(e, v[i]) - t1));
  }
  Orbit o = finish_orbit(e, std::move(params));
  // Use the closed-form vertices themselves rather than re-evaluated ones.
  o.vertices = std::move(v);
  o.j_values = joachimsthal_values(e, o.vertices);
  if (!(o.max_residual < 1e-10)) {
    std::ostringstream msg;
    msg << "closed-form 3-periodic failed the reflection check at t1=" << t1
        << " (residual " << o.max_residual << ")";
    throw SolverError(msg.str());
  }
  return o;
}

CausticSpec confocal_caustic_n3(const EllipseSpec& e) {
  require_non_circle(e, "confocal_caustic_n3");
  const double a2 = e.a * e.a, b2 = e.b * e.b;
  const double c2 = a2 - b2;
  return {e.a * (e.delta - b2) / c2, e.b * (a2 - e.delta) / c2};
}

std::vector<double> joachimsthal_values(const EllipseSpec& e, std::span<const Point2d> vertices) {
  const std::size_t n = vertices.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2d incoming = (vertices[i] - vertices[(i + n - 1) % n]).normalized();
    out[i] = 0.5 * ellipse_gradient(e, vertices[i]).dot(incoming);
  }
  return out;
}

double joachimsthal(const EllipseSpec& e, const Orbit& orbit) {
  const std::vector<double> j = joachimsthal_values(e, orbit.vertices);
  const double mean = std::accumulate(j.begin(), j.end(), 0.0) / j.size();
  const auto [lo, hi] = std::minmax_element(j.begin(), j.end());
  if ((*hi - *lo) / std::abs(mean) > 1e-8) {
    std::ostringstream msg;
    msg << "Joachimsthal spread " << (*hi - *lo) / std::abs(mean) << " exceeds 1e-8: not an orbit";
    throw SolverError(msg.str());
  }
  return mean;
}

JoachimsthalPerimeter n3_closed_form_jl(const EllipseSpec& e) {
  require_non_circle(e, "n3_closed_form_jl");
  const double a2 = e.a * e.a, b2 = e.b * e.b;
  const double j = std::sqrt(2.0 * e.delta - a2 - b2) / (a2 - b2);
  return {j, 2.0 * (e.delta + a2 + b2) * j};
}

double stachel_j(const EllipseSpec& e, double caustic_a) {
  if (!(caustic_a > 0.0) || !(caustic_a < e.a)) {
    throw ValidationError("caustic major semiaxis must lie in (0, a)");
  }
  return std::sqrt(e.a * e.a - caustic_a * caustic_a) / (e.a * e.b);
}

double caustic_a_from_j(const EllipseSpec& e, double j) {
  const double s = 1.0 - e.b * e.b * j * j;
  if (!(j > 0.0) || !(s > 0.0)) throw ValidationError("Joachimsthal constant out of range");
  return e.a * std::sqrt(s);
}

CausticSpec caustic_from_j(const EllipseSpec& e, double j) {
  const double a2 = caustic_a_from_j(e, j);
  const double b2sq = a2 * a2 - e.c * e.c;
  if (!(b2sq > 0.0)) throw ValidationError("caustic is not an ellipse for this Joachimsthal value");
  return {a2, std::sqrt(b2sq)};
}

double reflection_residual(const EllipseSpec& e, double t_prev, double t, double t_next) {
  const Point2d p = ellipse_point(e, t);
  const Point2d u = ellipse_point(e, t_prev) - p;
  const Point2d w = ellipse_point(e, t_next) - p;
  const double nu = u.norm(), nw = w.norm();
  if (!(nu > 0.0) || !(nw > 0.0)) {
    throw ValidationError("reflection_residual needs distinct boundary points");
  }
  return ellipse_tangent(e, t).dot(u / nu + w / nw);
}

Orbit solve_nperiodic(const EllipseSpec& e, int n, double t1, const SolverOptions& opts) {
  if (n < 3) throw ValidationError("solve_nperiodic needs n >= 3");
  if (!std::isfinite(t1)) throw ValidationError("t1 must be finite");

  std::vector<double> t = shooting_seed(e, n, t1);
  const int m = n - 1;

  auto residuals = [&](const std::vector<double>& tt) {
    Eigen::VectorXd r(m);
    for (int i = 1; i < n; ++i) {
      const double next = (i + 1 < n) ? tt[i + 1] : tt[0] + kTwoPi;
      r(i - 1) = reflection_residual(e, tt[i - 1], tt[i], next);
    }
    return r;
  };

  Eigen::VectorXd r = residuals(t);
  int it = 0;
  for (; it < opts.max_iterations && r.cwiseAbs().maxCoeff() >= opts.tolerance; ++it) {
    Eigen::MatrixXd jac(m, m);
    for (int k = 0; k < m; ++k) {
      std::vector<double> tp = t;
      tp[k + 1] += opts.fd_step;
      jac.col(k) = (residuals(tp) - r) / opts.fd_step;
    }
    const Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-r);
    for (int k = 0; k < m; ++k) t[k + 1] += step(k);
    r = residuals(t);
  }
  if (!(r.cwiseAbs().maxCoeff() < opts.tolerance)) {
    std::ostringstream msg;
    msg << "N=" << n << " orbit did not converge at t1=" << t1 << " after " << it
        << " iterations (max residual " << r.cwiseAbs().maxCoeff() << ")";
    throw SolverError(msg.str());
  }

  for (int i = 0; i < n; ++i) {
    const double next = (i + 1 < n) ? t[i + 1] : t[0] + kTwoPi;
    if (!(next - t[i] > 1e-9)) {
      std::ostringstream msg;
      msg << "N=" << n << " orbit at t1=" << t1 << " collapsed to a lower period";
      throw SolverError(msg.str());
    }
  }

  Orbit o = finish_orbit(e, std::move(t));
  if (!(o.max_residual < std::max(opts.tolerance, 1e-12))) {
    std::ostringstream msg;
    msg << "N=" << n << " orbit at t1=" << t1 << " fails closure at the first vertex (residual "
        << o.max_residual << ")";
    throw SolverError(msg.str());
  }
  return o;
}

}  // namespace binv
