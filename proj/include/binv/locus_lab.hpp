#pragma once

#include <binv/fitting.hpp>
#include <binv/invariant_lab.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace binv {

enum class Family { billiard, focus_inversive, center_inversive };

std::string_view family_name(Family f);
/// Accepts "billiard", "inversive"/"focus-inversive", "center-inversive".
Family parse_family(std::string_view name);

struct LocusSample {
  int center_id = 0;
  Family family = Family::billiard;
  std::vector<double> t1;
  std::vector<Point2d> points;
  int grid = 0;
  /// Length scale for the point test (the billiard major semiaxis).
  double scale = 1.0;
};

struct LocusTolerances {
  double point = 1e-9;
  double circle = 1e-6;
  double conic = 1e-6;
  double non_conic = 1e-3;
};

enum class Verdict { point, circle, ellipse, non_conic };

std::string_view verdict_name(Verdict v);

struct LocusClass {
  Verdict verdict = Verdict::non_conic;
  LocusTolerances tols;
  double diameter = 0.0;
  std::optional<CircleFit> circle;
  std::optional<ConicFit> conic;
  /// circle rms / radius.
  double circle_rel_rms = 0.0;
  /// conic rms / locus diameter.
  double conic_rel_rms = 0.0;
  /// The conic residual fell between tol_conic and the non-conic threshold.
  bool in_gap = false;
};

/// One center per grid t1 over 3-periodics of the chosen family. cfg.rho is
/// also the radius used for the center-inversive family.
LocusSample sweep_locus(const EllipseSpec& e, const InversiveConfig& cfg, int id, Family family,
                        int grid);

LocusClass classify_locus(const LocusSample& s, const LocusTolerances& tols = {});

struct CircleRef {
  Point2d center = Point2d::Zero();
  double radius = 0.0;
};

/// Printed circle loci of X_k† for k ∈ {1, 2, 3, 4, 5, 9, 11, 100}.
CircleRef circle_locus_reference(const EllipseSpec& e, double rho, int id);

bool has_circle_reference(int id);

/// Comparison of a fitted circle with a reference under the mirror convention.
struct CircleMatch {
  bool mirrored = false;
  Point2d reference_center = Point2d::Zero();
  double reference_radius = 0.0;
  /// |center − ref| / max(|ref|, scale).
  double center_rel_error = 0.0;
  double radius_rel_error = 0.0;
};

CircleMatch match_circle(const CircleFit& fit, const CircleRef& ref, double scale);

/// The 28 ids listed as circular focus-inversive loci.
const std::vector<int>& theorem_circle_ids();

struct CenterInversiveX3Report {
  ConicFit billiard_fit;
  ConicFit inversive_fit;
  /// Semiaxes along x and along y of each locus.
  Point2d billiard_axes = Point2d::Zero();
  Point2d inversive_axes = Point2d::Zero();
  double expected_ratio = 0.0;  // ρ²/δ
  double ratio_x = 0.0;
  double ratio_y = 0.0;
  /// aspect(X₃^⊙ locus) · aspect(caustic), both as x-semiaxis / y-semiaxis.
  double aspect_product = 0.0;
  /// Largest |(|OX₃|² − R²) + δ| over the sweep.
  double max_power_error = 0.0;
  double center_offset = 0.0;
  /// Angular offset from the coordinate axes, as min(|sin θ|, |cos θ|).
  double axis_tilt = 0.0;
};

CenterInversiveX3Report center_inversive_x3_check(const EllipseSpec& e, double rho = 1.0,
                                                  int grid = 256);

struct SwanReport {
  int id = 0;
  /// max |f(P) − 1| over the billiard-family locus.
  double max_level_error = 0.0;
  LocusClass inversive;
};

SwanReport swan_check(const EllipseSpec& e, int id, const InversiveConfig& cfg = {}, int grid = 256,
                      const LocusTolerances& tols = {});

}  // namespace binv
