#include "test_support.hpp"

#include <binv/errors.hpp>
#include <binv/locus_lab.hpp>

#include <map>

using namespace binv;
using namespace binv::test;

namespace {

struct Circ {
  double cx, r;
};

// Printed circle loci, re-typed as the oracle.
Circ printed(double a, double b, double rho, int id) {
  const double c = std::sqrt(a * a - b * b);
  const double d = std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b);
  const double a2 = a * a, b2 = b * b, b4 = b2 * b2, r2 = rho * rho;
  switch (id) {
    case 1: return {c * (-1 + r2 * (-2 * a2 + b2 + 2 * d) / (2 * b4)), r2 * (-2 * d * d + b4 + (2 * a2 - b2) * d) / (2 * a * b4)};
    case 2: return {-c * (1 + r2 * (2 * a2 - b2 - d) / (3 * a2 * b2)), r2 * (2 * a2 - b2 - d) / (3 * a * b2)};
    case 3: return {-c * (1 + r2 * (a2 + b2) / (2 * b4)), r2 * a * (-b2 + d) / (2 * b4)};
    case 4: return {c * (-1 + r2 * (b2 + d) * d / (a2 * b4)), r2 * c * c * (b2 + d) / (a * b4)};
    case 5:
      return {c * (-1 + r2 * (a2 * a2 - 3 * a2 * b2 + 2 * b4 + 2 * b2 * d) / (4 * a2 * b4)),
              r2 * ((3 * a2 - 2 * b2) * b2 + (a2 - 2 * b2) * d) / (4 * a * b2)};
    case 9: return {-c * (1 + r2 / (2 * b2)), r2 * (2 * a2 - b2 - d) / (2 * a * b2)};
    case 11: return {c * (-1 + r2 * (-a2 + b2 + d) / (2 * a2 * b2)), r2 * (-a2 + b2 + d) / (2 * a * b2)};
    case 100: return {-c * (1 + r2 / b2), r2 * a / b2};
    default: return {0, 0};
  }
}

const std::map<int, LocusClass>& inversive_classes() {
  static const std::map<int, LocusClass> out = [] {
    std::map<int, LocusClass> m;
    const auto e = make_ellipse(1.5, 1.0);
    for (int id : supported_centers()) {
      m.emplace(id, classify_locus(sweep_locus(e, InversiveConfig{}, id, Family::focus_inversive, 256)));
    }
    return m;
  }();
  return out;
}

double level(const EllipseSpec& e, const Point2d& p) { return p.x() * p.x() / (e.a * e.a) + p.y() * p.y() / (e.b * e.b); }

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("billiard") == Family::billiard);
  CHECK(parse_family("inversive") == Family::focus_inversive);
  CHECK(parse_family("focus-inversive") == Family::focus_inversive);
  CHECK(parse_family("center-inversive") == Family::center_inversive);
  CHECK_THROWS_AS(parse_family("pedal"), ValidationError);
  CHECK(family_name(Family::center_inversive) == "center-inversive");
  CHECK(verdict_name(Verdict::non_conic) == "non-conic");
}

TEST_CASE("sweep_locus validation") {
  const auto e = make_ellipse(1.5, 1.0);
  CHECK_THROWS_AS(sweep_locus(e, InversiveConfig{}, 73, Family::billiard, 64), ValidationError);
  CHECK_THROWS_AS(sweep_locus(make_ellipse(1.0, 1.0), InversiveConfig{}, 1, Family::billiard, 64), ValidationError);
  CHECK_THROWS_AS(sweep_locus(e, InversiveConfig{}, 1, Family::billiard, 8), ValidationError);
  const LocusSample s = sweep_locus(e, InversiveConfig{}, 1, Family::billiard, 64);
  CHECK(s.points.size() == 64);
  CHECK(s.t1.size() == 64);
  CHECK(s.grid == 64);
  CHECK(s.scale == 1.5);
}

TEST_CASE("billiard-family loci") {
  const auto e = make_ellipse(1.5, 1.0);
  const LocusSample x9 = sweep_locus(e, InversiveConfig{}, 9, Family::billiard, 128);
  for (const auto& p : x9.points) CHECK(p.norm() < 1e-9 * e.a);
  CHECK(classify_locus(x9).verdict == Verdict::point);
  for (int id : {88, 100, 162}) {
    CAPTURE(id);
    for (const auto& p : sweep_locus(e, InversiveConfig{}, id, Family::billiard, 128).points) {
      CHECK(std::abs(level(e, p) - 1.0) < 1e-8);
    }
  }
  // Billiard X1 sweeps an ellipse, not a circle.
  const LocusClass x1 = classify_locus(sweep_locus(e, InversiveConfig{}, 1, Family::billiard, 128));
  CHECK(x1.verdict == Verdict::ellipse);
}

TEST_CASE("classification thresholds") {
  LocusSample same;
  same.points.assign(40, Point2d(0.3, 0.2));
  same.scale = 1.0;
  CHECK(classify_locus(same).verdict == Verdict::point);

  LocusSample ell;
  for (int k = 0; k < 64; ++k) ell.points.emplace_back(2 * std::cos(2 * kPi * k / 64), std::sin(2 * kPi * k / 64));
  const LocusClass c = classify_locus(ell);
  CHECK(c.verdict == Verdict::ellipse);
  CHECK(c.circle_rel_rms > 0.1);
  CHECK(c.tols.circle == 1e-6);

  // Deterministic given the sample and tolerances.
  const LocusClass again = classify_locus(ell);
  CHECK(again.conic_rel_rms == c.conic_rel_rms);

  LocusTolerances loose;
  loose.circle = 1.0;
  CHECK(classify_locus(ell, loose).verdict == Verdict::circle);
}

TEST_CASE("circle_locus_reference") {
  const auto e = make_ellipse(2.0, 1.0);
  const CircleRef r100 = circle_locus_reference(e, 1.0, 100);
  CHECK(close_pt(r100.center, Point2d(-3.4641, 0), 1e-4));
  CHECK(close(r100.radius, 2.0, 1e-14));
  CHECK(close(circle_locus_reference(e, 1.0, 9).radius, 0.8486, 1e-4));
  for (int id : {1, 2, 3, 4, 5, 9, 11, 100}) {
    CAPTURE(id);
    CHECK(has_circle_reference(id));
    const CircleRef r = circle_locus_reference(e, 1e-5, id);
    CHECK(r.radius < 1e-8);
    CHECK(close(std::abs(r.center.x()), e.c, 1e-8));
    const Circ o = printed(2.0, 1.0, 0.8, id);
    const CircleRef got = circle_locus_reference(e, 0.8, id);
    CHECK(close_rel(got.center.x(), o.cx, 1e-13));
    CHECK(close_rel(got.radius, o.r, 1e-13));
  }
  CHECK_FALSE(has_circle_reference(7));
  CHECK_THROWS_AS(circle_locus_reference(e, 1.0, 7), ValidationError);
  CHECK_THROWS_AS(circle_locus_reference(make_ellipse(1.0, 1.0), 1.0, 1), ValidationError);
}

TEST_CASE("X2 locus at a/b = 2 matches the printed circle") {
  const auto e = make_ellipse(2.0, 1.0);
  const LocusClass c = classify_locus(sweep_locus(e, InversiveConfig{}, 2, Family::focus_inversive, 256));
  REQUIRE(c.verdict == Verdict::circle);
  const Circ o = printed(2.0, 1.0, 1.0, 2);
  CHECK(close(std::min(std::abs(c.circle->center.x() - o.cx), std::abs(c.circle->center.x() + o.cx)), 0.0,
              1e-7 * std::abs(o.cx)));
  CHECK(close_rel(c.circle->radius, o.r, 1e-7));
}

TEST_CASE("theorem ids sweep circles centered on the major axis") {
  const auto& cls = inversive_classes();
  const auto& ids = theorem_circle_ids();
  CHECK(ids.size() == 28);
  int implemented = 0;
  for (int id : ids) {
    if (!is_supported_center(id)) continue;
    ++implemented;
    CAPTURE(id);
    const LocusClass& c = cls.at(id);
    CHECK(c.verdict == Verdict::circle);
    CHECK(c.circle_rel_rms < 1e-6);
    CHECK(std::abs(c.circle->center.y()) < 1e-8 * 1.5);
  }
  CHECK(implemented == 27);
}

TEST_CASE("printed centers and radii under the mirror convention") {
  const auto e = make_ellipse(1.5, 1.0);
  for (int id : {1, 2, 3, 4, 5, 9, 11, 100}) {
    CAPTURE(id);
    const LocusClass& c = inversive_classes().at(id);
    const CircleMatch m = match_circle(*c.circle, circle_locus_reference(e, 1.0, id), e.a);
    CHECK(m.center_rel_error < 1e-7);
    CHECK(m.radius_rel_error < 1e-7);
    const Circ o = printed(1.5, 1.0, 1.0, id);
    CHECK(close(std::abs(c.circle->center.x()), std::abs(o.cx), 1e-7 * std::max(std::abs(o.cx), e.a)));
    CHECK(close_rel(c.circle->radius, o.r, 1e-7));
  }
}

TEST_CASE("match_circle picks the nearer mirror branch") {
  CircleFit fit;
  fit.center = Point2d(1.0, 0.0);
  fit.radius = 2.0;
  const CircleMatch m = match_circle(fit, CircleRef{Point2d(-1.0, 0.0), 2.0}, 1.0);
  CHECK(m.mirrored);
  CHECK(m.center_rel_error == 0.0);
  CHECK_FALSE(match_circle(fit, CircleRef{Point2d(1.0, 0.0), 2.0}, 1.0).mirrored);
}

TEST_CASE("observations beyond the theorem list") {
  const auto& cls = inversive_classes();
  CHECK(cls.at(88).verdict == Verdict::non_conic);
  CHECK_FALSE(cls.at(88).in_gap);
  CHECK(cls.at(162).verdict == Verdict::non_conic);
  CHECK_FALSE(cls.at(162).in_gap);
  CHECK(cls.at(150).verdict == Verdict::circle);
  CHECK(cls.at(934).verdict == Verdict::circle);
  CHECK(close_pt(cls.at(934).circle->center, cls.at(100).circle->center, 1e-7 * 1.5));
  CHECK(close_rel(cls.at(934).circle->radius, cls.at(100).circle->radius, 1e-7));
  // Centroid corollary.
  CHECK(cls.at(2).verdict == Verdict::circle);
  CHECK(cls.at(10).verdict == Verdict::circle);
  // The Gergonne point is stationary.
  CHECK(cls.at(7).verdict == Verdict::point);
}

TEST_CASE("swan_check") {
  const auto e = make_ellipse(1.5, 1.0);
  const SwanReport s100 = swan_check(e, 100);
  CHECK(s100.max_level_error < 1e-8);
  CHECK(s100.inversive.verdict == Verdict::circle);
  const SwanReport s88 = swan_check(e, 88);
  CHECK(s88.max_level_error < 1e-8);
  CHECK(s88.inversive.verdict != Verdict::circle);
  const SwanReport s162 = swan_check(e, 162);
  CHECK(s162.max_level_error < 1e-8);
  CHECK(s162.inversive.verdict == Verdict::non_conic);
  // A non-swan fails the level test.
  CHECK(swan_check(e, 1, InversiveConfig{}, 64).max_level_error > 0.1);
}

TEST_CASE("center-inversive X3 locus") {
  for (double ratio : {1.5, 2.0}) {
    const auto e = make_ellipse(ratio, 1.0);
    const auto r = center_inversive_x3_check(e);
    CAPTURE(ratio);
    CHECK(r.billiard_fit.type == ConicType::ellipse);
    CHECK(r.inversive_fit.type == ConicType::ellipse);
    CHECK(close(r.expected_ratio, 1.0 / e.delta, 1e-15));
    CHECK(close_rel(r.ratio_x, 1.0 / e.delta, 1e-7));
    CHECK(close_rel(r.ratio_y, 1.0 / e.delta, 1e-7));
    CHECK(close(r.aspect_product, 1.0, 1e-7));
    CHECK(r.max_power_error < 1e-9);
    CHECK(r.center_offset < 1e-9);
    CHECK(r.axis_tilt < 1e-7);
  }
  // Independent power check at a/b = 2: |OX3|² − R² = −δ.
  const auto e = make_ellipse(2.0, 1.0);
  for (double t1 : {0.0, 0.9, 2.4}) {
    const Orbit o = three_periodic(e, t1);
    const Triangle<double> t(o.vertices[0], o.vertices[1], o.vertices[2]);
    const Point2d x3 = center_point(t, 3);
    const double power = x3.squaredNorm() - (o.vertices[0] - x3).squaredNorm();
    CHECK(close(power, -3.6056, 1e-4));
    CHECK(close(power, -e.delta, 1e-9));
  }
}
