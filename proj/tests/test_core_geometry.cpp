#include "test_support.hpp"

#include <binv/core_geometry.hpp>
#include <binv/errors.hpp>

#include <Eigen/Geometry>

using namespace binv;
using namespace binv::test;

TEST_CASE("make_ellipse derived constants") {
  const auto circle = make_ellipse(1.0, 1.0);
  CHECK(circle.c == 0.0);
  CHECK(circle.delta == doctest::Approx(1.0));
  CHECK(circle.eps == 0.0);
  CHECK(circle.is_circle());

  const auto e = make_ellipse(2.0, 1.0);
  CHECK(close(e.c, std::sqrt(3.0), 1e-15));
  CHECK(close(e.delta, std::sqrt(13.0), 1e-15));
  CHECK(close(e.eps, std::sqrt(3.0) / 2.0, 1e-15));

  // δ² = a⁴ − a²b² + b⁴ for a = 1.5, b = 1.
  const auto e15 = make_ellipse(1.5, 1.0);
  CHECK(close(e15.delta, std::sqrt(5.0625 - 2.25 + 1.0), 1e-15));
  CHECK(close(e15.delta, 1.9526, 1e-4));
  // δ ≥ b² with equality only for circles.
  CHECK(e15.delta > 1.0);
}

TEST_CASE("make_ellipse rejects bad input") {
  CHECK_THROWS_AS(make_ellipse(1.0, 2.0), ValidationError);
  CHECK_THROWS_AS(make_ellipse(0.0, 0.0), ValidationError);
  CHECK_THROWS_AS(make_ellipse(-1.0, -2.0), ValidationError);
  CHECK_THROWS_AS(make_ellipse(std::nan(""), 1.0), ValidationError);
  CHECK_THROWS_AS(make_ellipse(1.0, std::nan("")), ValidationError);
  CHECK_THROWS_AS(make_ellipse(HUGE_VAL, 1.0), ValidationError);
}

TEST_CASE("ellipse_point examples and on-curve property") {
  const auto e = make_ellipse(2.0, 1.0);
  CHECK(close_pt(ellipse_point(e, 0.0), Point2d(2, 0), 1e-15));
  CHECK(close_pt(ellipse_point(e, kPi / 2), Point2d(0, 1), 1e-15));
  CHECK(close_pt(ellipse_point(e, kPi / 3), Point2d(1, std::sqrt(3.0) / 2), 1e-15));

  auto gen = rng();
  std::uniform_real_distribution<double> t(-10.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) worst = std::max(worst, std::abs(ellipse_level(e, ellipse_point(e, t(gen))) - 1.0));
  CHECK(worst < 1e-14);
}

TEST_CASE("ellipse_gradient") {
  const auto e = make_ellipse(2.0, 1.0);
  CHECK(close_pt(ellipse_gradient(e, Point2d(2, 0)), Point2d(1, 0), 1e-15));
  CHECK(close_pt(ellipse_gradient(e, Point2d(0, 1)), Point2d(0, 2), 1e-15));
  const auto u = make_ellipse(1.0, 1.0);
  for (double t : {0.1, 1.0, 2.5}) {
    const Point2d g = ellipse_gradient(u, Point2d(std::cos(t), std::sin(t)));
    CHECK(close_pt(g, 2.0 * Point2d(std::cos(t), std::sin(t)), 1e-15));
    CHECK(close(g.norm(), 2.0, 1e-15));
  }
}

TEST_CASE("foci sit at (-c, 0) and (+c, 0)") {
  const auto e = make_ellipse(2.0, 1.0);
  CHECK(close_pt(focus(e, 1), Point2d(-std::sqrt(3.0), 0), 1e-15));
  CHECK(close_pt(focus(e, 2), Point2d(std::sqrt(3.0), 0), 1e-15));
  CHECK_THROWS_AS(focus(e, 3), ValidationError);
}

TEST_CASE("invert_point examples") {
  const auto k = make_circle<double>(Point2d::Zero(), 1.0);
  CHECK(close_pt(invert_point(Point2d(2, 0), k), Point2d(0.5, 0), 1e-15));
  CHECK(close_pt(invert_point(Point2d(1, 1), k), Point2d(0.5, 0.5), 1e-15));
  const Point2d on(std::cos(0.3), std::sin(0.3));
  CHECK(close_pt(invert_point(on, k), on, 1e-15));
  CHECK_THROWS_AS(invert_point(Point2d(0, 0), k), SingularInversion);
  CHECK_THROWS_AS(make_circle<double>(Point2d::Zero(), 0.0), ValidationError);
}

TEST_CASE("inversion is an involution and preserves the spoke product") {
  auto gen = rng(7);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi), logd(-6.0, 6.0);
  const auto k = make_circle<double>(Point2d(0.3, -1.2), 0.8);
  for (int i = 0; i < 2000; ++i) {
    const double d = 0.8 * std::pow(10.0, logd(gen));
    const double th = ang(gen);
    const Point2d p = k.center + d * Point2d(std::cos(th), std::sin(th));
    const Point2d q = invert_point(p, k);
    const Point2d back = invert_point(q, k);
    // Tiny images lose relative precision against the center offset.
    CHECK((back - p).norm() <= 1e-9 * std::max(1.0, (p - k.center).norm()));
    const double prod = (q - k.center).norm() * (p - k.center).norm();
    CHECK(close_rel(prod, 0.64, 1e-9));
    // Same ray from the center.
    CHECK(std::abs(cross<double>(p - k.center, q - k.center)) <= 1e-9 * (p - k.center).norm() * (q - k.center).norm());
    CHECK((p - k.center).dot(q - k.center) > 0.0);
  }
}

TEST_CASE("limacon_point is the focus inversion of the ellipse") {
  const auto e = make_ellipse(2.0, 1.0);
  // Vertex (2, 0) inverted about (−√3, 0) with ρ = 1.
  const Point2d v = limacon_point(e, 1.0, 0.0);
  CHECK(close_pt(v, Point2d(-std::sqrt(3.0) + 1.0 / (2.0 + std::sqrt(3.0)), 0), 1e-14));
  CHECK(close(v.x(), -1.4641, 1e-4));

  const auto u = make_ellipse(1.0, 1.0);
  for (double t : {0.0, 1.0, 2.0}) CHECK(close_pt(limacon_point(u, 1.0, t), ellipse_point(u, t), 1e-15));

  const double rho = 0.7;
  for (int k = 0; k < 64; ++k) {
    const double t = 2 * kPi * k / 64;
    const Point2d direct = invert_point(ellipse_point(e, t), make_circle(focus(e, 1), rho));
    CHECK(close_pt(limacon_point(e, rho, t), direct, 1e-12));
    // Focus-polar form: r = (ρ²a/b²)(1 − ε cos θ), θ measured from +x at f₁.
    const Point2d rel = limacon_point(e, rho, t) - focus(e, 1);
    const double theta = std::atan2(rel.y(), rel.x());
    CHECK(close_rel(rel.norm(), rho * rho * e.a / (e.b * e.b) * (1 - e.eps * std::cos(theta)), 1e-12));
  }
}

TEST_CASE("booth_point inverts about the center") {
  const auto e = make_ellipse(2.0, 1.0);
  CHECK(close_pt(booth_point(e, 1.0, 0.0), Point2d(0.5, 0), 1e-15));
  CHECK(close_pt(booth_point(e, 1.0, kPi / 2), Point2d(0, 1), 1e-15));
}

TEST_CASE("polygon invariants") {
  CHECK_THROWS_AS(PolygonD(std::vector<Point2d>{{0, 0}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(PolygonD(std::vector<Point2d>{{0, 0}, {0, 0}, {1, 1}}), DegenerateGeometry);
  CHECK_THROWS_AS(PolygonD(std::vector<Point2d>{{0, 0}, {1, 0}, {std::nan(""), 1}}), ValidationError);
}

TEST_CASE("signed_area and perimeter") {
  const std::vector<Point2d> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(close(signed_area(square), 1.0, 1e-15));
  CHECK(close(perimeter(square), 4.0, 1e-15));
  const std::vector<Point2d> tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(close(signed_area(tri), 0.5, 1e-15));
  const std::vector<Point2d> rev{{0, 1}, {1, 0}, {0, 0}};
  CHECK(close(signed_area(rev), -0.5, 1e-15));

  std::vector<Point2d> eq;
  for (int k = 0; k < 3; ++k) eq.emplace_back(std::cos(2 * kPi * k / 3), std::sin(2 * kPi * k / 3));
  CHECK(close(perimeter(eq), 3 * std::sqrt(3.0), 1e-14));
  CHECK(close(perimeter(eq), 5.196, 1e-3));

  // Rigid motions leave both unchanged.
  const std::vector<Point2d> poly{{0.1, 0.2}, {2.0, -0.3}, {2.5, 1.7}, {0.4, 2.2}, {-0.6, 1.0}};
  const Eigen::Rotation2Dd rot(0.83);
  std::vector<Point2d> moved;
  for (const auto& p : poly) moved.push_back(rot * p + Point2d(-3.0, 5.5));
  CHECK(close(signed_area(moved), signed_area(poly), 1e-12));
  CHECK(close(perimeter(moved), perimeter(poly), 1e-12));
}

TEST_CASE("interior_cosines") {
  std::vector<Point2d> eq;
  for (int k = 0; k < 3; ++k) eq.emplace_back(std::cos(2 * kPi * k / 3), std::sin(2 * kPi * k / 3));
  for (double c : interior_cosines(PolygonD(eq))) CHECK(close(c, 0.5, 1e-15));

  const PolygonD square(std::vector<Point2d>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  for (double c : interior_cosines(square)) CHECK(close(c, 0.0, 1e-15));

  const auto rt = interior_cosines(PolygonD(std::vector<Point2d>{{0, 0}, {1, 0}, {0, 1}}));
  CHECK(close(rt[0], 0.0, 1e-15));
  CHECK(close(rt[1], std::sqrt(0.5), 1e-15));
  CHECK(close(rt[2], std::sqrt(0.5), 1e-15));

  // Non-convex input: the reflex vertex still gets a cosine in [−1, 1].
  const PolygonD dart(std::vector<Point2d>{{0, 0}, {2, 1}, {0, 2}, {0.5, 1}});
  for (double c : interior_cosines(dart)) {
    CHECK(c >= -1.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("templated on the scalar type") {
  const auto e = make_ellipse<long double>(2.0L, 1.0L);
  const auto p = ellipse_point(e, 0.5L);
  CHECK(std::abs(static_cast<double>(ellipse_level(e, p) - 1.0L)) < 1e-17);
}
