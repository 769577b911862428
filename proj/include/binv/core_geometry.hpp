#pragma once

// Primitive planar geometry for elliptic billiards: the billiard ellipse and
// its derived constants, circle inversion, inverse curves of the ellipse, and
// polygon metrics. Everything here is header-only and templated on the scalar.

#include <binv/errors.hpp>

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace binv {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point2d = Point2<double>;

/// Billiard table x²/a² + y²/b² = 1 with a ≥ b > 0.
///
/// `c` is the focal half-distance, `delta` = √(a⁴ − a²b² + b⁴), `eps` the
/// eccentricity. For a circle c = eps = 0 and delta = a².
template <typename Scalar>
struct Ellipse {
  Scalar a{1};
  Scalar b{1};
  Scalar c{0};
  Scalar delta{1};
  Scalar eps{0};

  bool is_circle() const { return c == Scalar(0); }
};

using EllipseSpec = Ellipse<double>;

template <typename Scalar>
Ellipse<Scalar> make_ellipse(Scalar a, Scalar b) {
  using std::sqrt;
  if (!(a > Scalar(0)) || !(b > Scalar(0)) || !std::isfinite(static_cast<double>(a)) ||
      !std::isfinite(static_cast<double>(b))) {
    throw ValidationError("ellipse semiaxes must be finite and positive");
  }
  if (a < b) {
    throw ValidationError("ellipse requires a >= b (major semiaxis first)");
  }
  Ellipse<Scalar> e;
  e.a = a;
  e.b = b;
  const Scalar a2 = a * a;
  const Scalar b2 = b * b;
  e.c = sqrt(a2 - b2);
  e.delta = sqrt(a2 * a2 - a2 * b2 + b2 * b2);
  e.eps = e.c / a;
  return e;
}

template <typename Scalar>
Point2<Scalar> ellipse_point(const Ellipse<Scalar>& e, Scalar t) {
  using std::cos;
  using std::sin;
  return {e.a * cos(t), e.b * sin(t)};
}

/// Unit tangent at parameter t, oriented along increasing t.
template <typename Scalar>
Point2<Scalar> ellipse_tangent(const Ellipse<Scalar>& e, Scalar t) {
  using std::cos;
  using std::sin;
  return Point2<Scalar>(-e.a * sin(t), e.b * cos(t)).normalized();
}

/// f(x, y) = (x/a)² + (y/b)²; equals 1 on the boundary.
template <typename Scalar>
Scalar ellipse_level(const Ellipse<Scalar>& e, const Point2<Scalar>& p) {
  const Scalar u = p.x() / e.a;
  const Scalar v = p.y() / e.b;
  return u * u + v * v;
}

template <typename Scalar>
Point2<Scalar> ellipse_gradient(const Ellipse<Scalar>& e, const Point2<Scalar>& p) {
  return {Scalar(2) * p.x() / (e.a * e.a), Scalar(2) * p.y() / (e.b * e.b)};
}

/// Boundary parameter of a point on (or near) the ellipse, in (-π, π].
template <typename Scalar>
Scalar ellipse_parameter(const Ellipse<Scalar>& e, const Point2<Scalar>& p) {
  using std::atan2;
  return atan2(p.y() / e.b, p.x() / e.a);
}

/// Foci are f₁ = (−c, 0) and f₂ = (+c, 0).
template <typename Scalar>
Point2<Scalar> focus(const Ellipse<Scalar>& e, int index) {
  if (index != 1 && index != 2) {
    throw ValidationError("focus index must be 1 or 2");
  }
  return {index == 1 ? -e.c : e.c, Scalar(0)};
}

template <typename Scalar>
struct Circle {
  Point2<Scalar> center{Point2<Scalar>::Zero()};
  Scalar radius{1};
};

using CircleSpec = Circle<double>;

template <typename Scalar>
Circle<Scalar> make_circle(const Point2<Scalar>& center, Scalar radius) {
  if (!(radius > Scalar(0)) || !std::isfinite(static_cast<double>(radius))) {
    throw ValidationError("circle radius must be finite and positive");
  }
  return {center, radius};
}

/// Inversion in circle K: the image lies on the ray from K's center through p
/// at distance ρ²/|p − center|.
template <typename Scalar>
Point2<Scalar> invert_point(const Point2<Scalar>& p, const Circle<Scalar>& k) {
  const Point2<Scalar> d = p - k.center;
  const Scalar d2 = d.squaredNorm();
  if (!(d2 > Scalar(0))) {
    throw SingularInversion("cannot invert the center of the inversion circle");
  }
  return k.center + (k.radius * k.radius / d2) * d;
}

/// Point of Pascal's limaçon: the inversion of ellipse_point(e, t) in the circle
/// of radius rho centered on focus `focus_index`. In focus-polar form its
/// radius is (ρ²a/b²)(1 + ε cos θ).
template <typename Scalar>
Point2<Scalar> limacon_point(const Ellipse<Scalar>& e, Scalar rho, Scalar t,
                             int focus_index = 1) {
  return invert_point(ellipse_point(e, t), make_circle(focus(e, focus_index), rho));
}

/// Point of Booth's curve: inversion of the ellipse in a concentric circle.
template <typename Scalar>
Point2<Scalar> booth_point(const Ellipse<Scalar>& e, Scalar rho, Scalar t) {
  return invert_point(ellipse_point(e, t), make_circle<Scalar>(Point2<Scalar>::Zero(), rho));
}

template <typename Scalar>
Scalar cross(const Point2<Scalar>& u, const Point2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

/// Closed polygon with N ≥ 3 vertices and no repeated consecutive vertex.
template <typename Scalar>
class Polygon {
 public:
  explicit Polygon(std::vector<Point2<Scalar>> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
      throw ValidationError("polygon needs at least 3 vertices");
    }
    Point2<Scalar> lo = vertices_.front();
    Point2<Scalar> hi = vertices_.front();
    for (const auto& v : vertices_) {
      if (!v.allFinite()) throw ValidationError("polygon vertex is not finite");
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
    const Scalar scale = (hi - lo).norm();
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!((vertices_[(i + 1) % n] - vertices_[i]).norm() > Scalar(1e-12) * scale)) {
        throw DegenerateGeometry("polygon has coincident consecutive vertices");
      }
    }
  }

  std::size_t size() const { return vertices_.size(); }
  const Point2<Scalar>& operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const Point2<Scalar>> vertices() const { return vertices_; }

 private:
  std::vector<Point2<Scalar>> vertices_;
};

using PolygonD = Polygon<double>;

// The metrics below accept raw vertex spans so they also apply to pedal
// polygons, whose feet may coincide.

/// Shoelace area ½ Σ Pᵢ × Pᵢ₊₁; positive for counterclockwise order.
template <typename Scalar>
Scalar signed_area(std::span<const Point2<Scalar>> v) {
  Scalar twice{0};
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    twice += cross(v[i], v[(i + 1) % n]);
  }
  return twice / Scalar(2);
}

template <typename Scalar>
Scalar signed_area(const std::vector<Point2<Scalar>>& v) {
  return signed_area(std::span<const Point2<Scalar>>(v));
}

template <typename Scalar>
Scalar signed_area(const Polygon<Scalar>& q) {
  return signed_area(q.vertices());
}

template <typename Scalar>
Scalar perimeter(std::span<const Point2<Scalar>> v) {
  Scalar sum{0};
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    sum += (v[(i + 1) % n] - v[i]).norm();
  }
  return sum;
}

template <typename Scalar>
Scalar perimeter(const std::vector<Point2<Scalar>>& v) {
  return perimeter(std::span<const Point2<Scalar>>(v));
}

template <typename Scalar>
Scalar perimeter(const Polygon<Scalar>& q) {
  return perimeter(q.vertices());
}

/// Cosine of the angle at each vertex between the two emanating edges. No
/// convexity is assumed, so reflex vertices report the cosine of the
/// smaller angle between the edge directions.
template <typename Scalar>
std::vector<Scalar> interior_cosines(const Polygon<Scalar>& q) {
  const std::size_t n = q.size();
  std::vector<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2<Scalar> u = (q[(i + n - 1) % n] - q[i]).normalized();
    const Point2<Scalar> w = (q[(i + 1) % n] - q[i]).normalized();
    out[i] = std::clamp(u.dot(w), Scalar(-1), Scalar(1));
  }
  return out;
}

}  // namespace binv
