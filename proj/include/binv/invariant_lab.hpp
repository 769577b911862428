#pragma once

#include <binv/billiard_orbits.hpp>
#include <binv/fitting.hpp>
#include <binv/inversive_family.hpp>
#include <binv/triangle_centers.hpp>

#include <optional>
#include <string>
#include <vector>

namespace binv {

/// A scalar sampled over the t1 grid of a family.
struct InvariantTrace {
  std::string name;
  std::vector<double> t1;
  std::vector<double> values;
  double mean = 0.0;
  double std = 0.0;
  double max_abs_dev = 0.0;
  std::optional<double> closed_form;
  /// True when the quantity has no closed form and invariance is conjectural.
  bool conjecture = false;
  /// For point-valued references: the reference was matched after x → −x.
  bool mirrored = false;

  /// std/|mean|, or std when the mean is zero.
  double rel_std() const;
  /// |mean − closed_form|/|closed_form| (absolute when the reference is 0).
  std::optional<double> rel_error() const;
};

/// Builds a trace with statistics filled in. Throws on empty input.
InvariantTrace make_trace(std::string name, std::vector<double> t1, std::vector<double> values,
                          std::optional<double> closed_form = std::nullopt);

/// Printed closed forms for the N = 3 focus-inversive family (focus f₁).
struct ClosedFormRefs {
  double L_dagger = 0.0;
  double sum_inv_spokes = 0.0;
  double sum_cosines = 0.0;
  double area_product = 0.0;
  Point2d X7_dagger = Point2d::Zero();
  Point2d X7_ddagger = Point2d::Zero();
  Point2d C9_dagger = Point2d::Zero();
  double R9_dagger = 0.0;
  Point2d C9_ddagger = Point2d::Zero();
  double a_dagger = 0.0;
  double b_dagger = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
};

ClosedFormRefs closed_form_refs(const EllipseSpec& e, double rho);

/// t1 = 2πk/grid, k = 0..grid−1.
std::vector<double> sweep_grid(int grid);

/// three_periodic for n = 3 on a non-circular table, solve_nperiodic otherwise
/// or when the closed form fails its reflection check (near-circular tables).
Orbit family_orbit(const EllipseSpec& e, int n, double t1);

/// Centered conic in center / semiaxes / angle form.
struct CenteredConic {
  Point2d center = Point2d::Zero();
  double semi_major = 0.0;
  double semi_minor = 0.0;
  /// Direction of the major axis, radians in (−π/2, π/2].
  double angle = 0.0;
};

/// The X₉-centered circumconic of a triangle. Throws DegenerateGeometry naming
/// the conic type when it is not an ellipse.
CenteredConic circumbilliard(const Triangle<double>& t);

/// Traces over the family for the configured focus. For n = 3 the set is
/// L†, Σ|P† − f|, Σ1/d, Σcos θ†, A₁†·A₂†, pedal-area gap, X₇† (x, y),
/// |X₉† − C₉†|, a†, b†, each with its closed form; for n > 3 the first six
/// are flagged as conjectural.
std::vector<InvariantTrace> sweep_family(const EllipseSpec& e, const InversiveConfig& cfg, int n,
                                         int grid);

/// Picks the trace with the given name; throws std::out_of_range if absent.
const InvariantTrace& find_trace(const std::vector<InvariantTrace>& traces, const std::string& name);

struct RotatingBilliardReport {
  int grid = 0;
  /// Largest per-sample relative spread of J over the three vertices.
  double max_vertex_spread = 0.0;
  /// (max − min)/mean of the per-sample mean J across the sweep.
  double sweep_spread = 0.0;
  double j_mean = 0.0;
  InvariantTrace semi_major;
  InvariantTrace semi_minor;
  InvariantTrace perimeter;
  /// Circle fit of the circumbilliard centers and the printed C₉†/R₉†.
  CircleFit center_fit;
  Point2d center_ref = Point2d::Zero();
  double radius_ref = 0.0;
  bool center_mirrored = false;
};

/// Checks that the focus-inversive 3-periodics are billiard orbits of their
/// own circumbilliard, expressed in that ellipse's frame.
RotatingBilliardReport verify_rotating_billiard(const EllipseSpec& e, double rho, int grid);

/// Chooses (x, y) or (−x, y) of `ref`, whichever is closer to `measured`.
struct MirrorChoice {
  Point2d ref = Point2d::Zero();
  bool mirrored = false;
};
MirrorChoice match_mirror(const Point2d& measured, const Point2d& ref);

}  // namespace binv
