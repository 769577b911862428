#include <binv/fitting.hpp>

#include <binv/errors.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace binv {

namespace {

void require_collinear_free(std::span<const Point2d> points) {
  Eigen::MatrixX2d centered(points.size(), 2);
  Point2d mean = Point2d::Zero();
  for (const auto& p : points) mean += p;
  mean /= static_cast<double>(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) centered.row(i) = (points[i] - mean).transpose();
  Eigen::JacobiSVD<Eigen::MatrixX2d> svd(centered);
  const auto s = svd.singularValues();
  if (!(s(0) > 0.0) || s(1) <= 1e-12 * s(0)) {
    throw DegenerateGeometry("fit input is collinear or coincident");
  }
}

}  // namespace

std::string_view conic_type_name(ConicType t) {
  switch (t) {
    case ConicType::ellipse: return "ellipse";
    case ConicType::parabola: return "parabola";
    case ConicType::hyperbola: return "hyperbola";
    case ConicType::degenerate: return "degenerate";
  }
  return "degenerate";
}

double point_set_diameter(std::span<const Point2d> points) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      d2 = std::max(d2, (points[i] - points[j]).squaredNorm());
    }
  }
  return std::sqrt(d2);
}

CircleFit fit_circle(std::span<const Point2d> points) {
  if (points.size() < 3) throw DegenerateGeometry("circle fit needs at least 3 points");
  require_collinear_free(points);

  // Shift to the centroid for conditioning; x² + y² + Dx + Ey + F = 0.
  Point2d mean = Point2d::Zero();
  for (const auto& p : points) mean += p;
  mean /= static_cast<double>(points.size());

  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixX3d m(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point2d q = points[i] - mean;
    m.row(i) << q.x(), q.y(), 1.0;
    rhs(i) = -q.squaredNorm();
  }
  const Eigen::Vector3d sol = m.colPivHouseholderQr().solve(rhs);
  Point2d c(-sol(0) / 2.0, -sol(1) / 2.0);
  double r = std::sqrt(std::max(0.0, c.squaredNorm() - sol(2)));

  // One Gauss–Newton step on r_i = |q_i − c| − r.
  Eigen::MatrixX3d jac(n, 3);
  Eigen::VectorXd res(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point2d d = (points[i] - mean) - c;
    const double dist = d.norm();
    res(i) = dist - r;
    if (dist > 0.0) {
      jac.row(i) << -d.x() / dist, -d.y() / dist, -1.0;
    } else {
      jac.row(i) << 0.0, 0.0, -1.0;
    }
  }
  const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-res);
  if (step.allFinite()) {
    c += step.head<2>();
    r += step(2);
  }

  CircleFit fit;
  fit.center = c + mean;
  fit.radius = std::abs(r);
  double acc = 0.0;
  for (const auto& p : points) {
    const double e = (p - fit.center).norm() - fit.radius;
    acc += e * e;
  }
  fit.rms = std::sqrt(acc / static_cast<double>(n));
  return fit;
}

ConicFit fit_conic(std::span<const Point2d> points) {
  if (points.size() < 6) throw DegenerateGeometry("conic fit needs at least 6 points");
  require_collinear_free(points);

  Point2d mean = Point2d::Zero();
  for (const auto& p : points) mean += p;
  mean /= static_cast<double>(points.size());
  double spread = 0.0;
  for (const auto& p : points) spread += (p - mean).squaredNorm();
  const double s = std::sqrt(spread / static_cast<double>(points.size()));

  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(n, 6);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point2d q = (points[i] - mean) / s;
    design.row(i) << q.x() * q.x(), q.x() * q.y(), q.y() * q.y(), q.x(), q.y(), 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv(4) <= 1e-12 * sv(0)) {
    throw DegenerateGeometry("conic fit is rank deficient (points admit several conics)");
  }
  const Eigen::Matrix<double, 6, 1> w = svd.matrixV().col(5);

  // Undo the normalization: M = Tᵀ M' T with q = T p (homogeneous).
  Eigen::Matrix3d mq;
  mq << w(0), w(1) / 2, w(3) / 2,
        w(1) / 2, w(2), w(4) / 2,
        w(3) / 2, w(4) / 2, w(5);
  Eigen::Matrix3d t;
  t << 1 / s, 0, -mean.x() / s,
       0, 1 / s, -mean.y() / s,
       0, 0, 1;
  const Eigen::Matrix3d mp = t.transpose() * mq * t;

  ConicFit fit;
  fit.coeffs << mp(0, 0), 2 * mp(0, 1), mp(1, 1), 2 * mp(0, 2), 2 * mp(1, 2), mp(2, 2);
  fit.coeffs.normalize();
  const double A = fit.coeffs(0), B = fit.coeffs(1), C = fit.coeffs(2);
  const double D = fit.coeffs(3), E = fit.coeffs(4), F = fit.coeffs(5);

  double acc = 0.0;
  for (const auto& p : points) {
    const double x = p.x(), y = p.y();
    const double f = A * x * x + B * x * y + C * y * y + D * x + E * y + F;
    const Point2d g(2 * A * x + B * y + D, B * x + 2 * C * y + E);
    const double gn = g.norm();
    const double e = gn > 0.0 ? f / gn : std::abs(f);
    acc += e * e;
  }
  fit.rms = std::sqrt(acc / static_cast<double>(n));

  const double disc = B * B - 4 * A * C;
  const double quad_scale = A * A + B * B + C * C;
  if (std::abs(disc) <= 1e-12 * quad_scale) {
    fit.type = ConicType::parabola;
    return fit;
  }
  if (disc > 0) {
    fit.type = ConicType::hyperbola;
    return fit;
  }

  Eigen::Matrix2d q;
  q << A, B / 2, B / 2, C;
  const Eigen::Vector2d center = q.ldlt().solve(Eigen::Vector2d(-D / 2, -E / 2));
  const double f0 = F + (D * center.x() + E * center.y()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(q);
  const Eigen::Vector2d lam = eig.eigenvalues();
  const double s0 = -f0 / lam(0), s1 = -f0 / lam(1);
  if (!(s0 > 0.0) || !(s1 > 0.0)) {
    fit.type = ConicType::degenerate;  // imaginary ellipse or a point
    return fit;
  }
  fit.type = ConicType::ellipse;
  fit.center = center;
  // Smaller |λ| ↔ longer axis.
  const int major = s0 >= s1 ? 0 : 1;
  fit.semi_major = std::sqrt(std::max(s0, s1));
  fit.semi_minor = std::sqrt(std::min(s0, s1));
  const Eigen::Vector2d dir = eig.eigenvectors().col(major);
  double ang = std::atan2(dir.y(), dir.x());
  if (ang <= -std::numbers::pi / 2) ang += std::numbers::pi;
  if (ang > std::numbers::pi / 2) ang -= std::numbers::pi;
  fit.angle = ang;
  return fit;
}

}  // namespace binv
