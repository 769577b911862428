#pragma once

// Kimberling triangle centers from trilinear coordinates.
//
// Each supported center is stored as a cyclic trilinear α = num(a,b,c)/den(a,b,c)
// in terms of the side lengths and angle cosines/sines of the reference
// triangle. Barycentric weights are formed as a·num_A·den_B·den_C (and
// cyclically), which clears the poles of centers like X(100) = 1/(b − c) so
// isosceles triangles map to the limiting vertex instead of NaN.

#include <binv/core_geometry.hpp>
#include <binv/errors.hpp>

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>

namespace binv {

template <typename Scalar>
class Triangle {
 public:
  Triangle(const Point2<Scalar>& p0, const Point2<Scalar>& p1, const Point2<Scalar>& p2)
      : v_{p0, p1, p2} {
    using std::abs;
    sides_ = {(p1 - p2).norm(), (p2 - p0).norm(), (p0 - p1).norm()};
    const Scalar scale = std::max({sides_[0], sides_[1], sides_[2]});
    area_ = cross<Scalar>(p1 - p0, p2 - p0) / Scalar(2);
    if (!(abs(area_) > Scalar(1e-14) * scale * scale)) {
      throw DegenerateGeometry("triangle is degenerate (zero area)");
    }
  }

  explicit Triangle(std::span<const Point2<Scalar>> v) : Triangle(checked(v, 0), v[1], v[2]) {}

  const Point2<Scalar>& vertex(int i) const { return v_[i]; }
  /// Length of the side opposite vertex i.
  Scalar side(int i) const { return sides_[i]; }
  Scalar signed_area() const { return area_; }

 private:
  static const Point2<Scalar>& checked(std::span<const Point2<Scalar>> v, int i) {
    if (v.size() != 3) throw ValidationError("triangle needs exactly 3 vertices");
    return v[i];
  }

  std::array<Point2<Scalar>, 3> v_;
  std::array<Scalar, 3> sides_{};
  Scalar area_{0};
};

template <typename Scalar>
using Trilinear = Eigen::Matrix<Scalar, 3, 1>;

/// Cartesian point from (unnormalized) barycentric weights.
template <typename Scalar>
Point2<Scalar> barycentric_to_cartesian(const Triangle<Scalar>& t, const Eigen::Matrix<Scalar, 3, 1>& w) {
  using std::abs;
  const Scalar sum = w.sum();
  if (!w.allFinite() || !(abs(sum) > Scalar(1e-14) * w.cwiseAbs().sum())) {
    throw DegenerateGeometry("barycentric weights describe a point at infinity or are undefined");
  }
  return (w(0) * t.vertex(0) + w(1) * t.vertex(1) + w(2) * t.vertex(2)) / sum;
}

/// Trilinears (α : β : γ) → barycentrics (aα : bβ : cγ) → Cartesian.
template <typename Scalar>
Point2<Scalar> trilinear_to_cartesian(const Triangle<Scalar>& t, const Trilinear<Scalar>& tri) {
  const Eigen::Matrix<Scalar, 3, 1> w(t.side(0) * tri(0), t.side(1) * tri(1), t.side(2) * tri(2));
  return barycentric_to_cartesian(t, w);
}

namespace detail {

/// Triangle data rotated so that `a`, `ca`, `sa` refer to the current vertex.
template <typename Scalar>
struct Corner {
  Scalar a, b, c;
  Scalar ca, cb, cc;
  Scalar sa, sb, sc;
};

template <typename Scalar>
struct Ratio {
  Scalar num;
  Scalar den;
};

inline constexpr std::array<int, 34> kSupportedCenters = {
    1,  2,  3,  4,  5,  7,  8,  9,  10, 11, 12, 20, 21, 35,  36,  40,  46,
    55, 56, 57, 63, 65, 78, 79, 80, 84, 88, 90, 100, 101, 150, 162, 934, 0};

// Trilinear α = num/den at the corner described by `k`. Returns den = 0 and
// num = 0 for an unknown id.
template <typename Scalar>
Ratio<Scalar> trilinear_ratio(int id, const Corner<Scalar>& k) {
  const Scalar one(1), two(2);
  const Scalar cos_bc = k.cb * k.cc + k.sb * k.sc;  // cos(B − C)
  switch (id) {
    case 1: return {one, one};
    case 2: return {one, k.a};
    case 3: return {k.ca, one};
    case 4: return {one, k.ca};
    case 5: return {cos_bc, one};
    case 7: return {k.b * k.c, k.b + k.c - k.a};
    case 8: return {k.b + k.c - k.a, k.a};
    case 9: return {k.b + k.c - k.a, one};
    case 10: return {k.b + k.c, k.a};
    case 11: return {one - cos_bc, one};
    case 12: return {one + cos_bc, one};
    case 20: return {k.ca - k.cb * k.cc, one};
    case 21: return {one, k.cb + k.cc};
    case 35: return {one + two * k.ca, one};
    case 36: return {one - two * k.ca, one};
    case 40: return {k.cb + k.cc - k.ca - one, one};
    case 46: return {k.cb + k.cc - k.ca, one};
    case 55: return {k.a * (k.b + k.c - k.a), one};
    case 56: return {k.a, k.b + k.c - k.a};
    case 57: return {one, k.b + k.c - k.a};
    case 63: return {k.b * k.b + k.c * k.c - k.a * k.a, one};  // ∝ cot A
    case 65: return {k.cb + k.cc, one};
    case 78: return {k.ca, k.ca - one};  // 1/(1 − sec A)
    case 79: return {one, one + two * k.ca};
    case 80: return {one, one - two * k.ca};
    case 84: return {one, k.cb + k.cc - k.ca - one};
    case 88: return {one, k.b + k.c - two * k.a};
    case 90: return {one, k.cb + k.cc - k.ca};
    case 100: return {one, k.b - k.c};
    case 101: return {k.a, k.b - k.c};
    case 162:  // tan A/(b² − c²)
      return {one, (k.b * k.b - k.c * k.c) * (k.b * k.b + k.c * k.c - k.a * k.a)};
    case 934: {
      const Scalar s = k.b + k.c - k.a;
      return {one, (k.b - k.c) * s * s};
    }
    default: return {Scalar(0), Scalar(0)};
  }
}

template <typename Scalar>
std::array<Corner<Scalar>, 3> corners(const Triangle<Scalar>& t) {
  using std::abs;
  const Scalar a = t.side(0), b = t.side(1), c = t.side(2);
  const Scalar twice_area = Scalar(2) * abs(t.signed_area());
  const Scalar ca = (b * b + c * c - a * a) / (Scalar(2) * b * c);
  const Scalar cb = (c * c + a * a - b * b) / (Scalar(2) * c * a);
  const Scalar cc = (a * a + b * b - c * c) / (Scalar(2) * a * b);
  const Scalar sa = twice_area / (b * c);
  const Scalar sb = twice_area / (c * a);
  const Scalar sc = twice_area / (a * b);
  return {Corner<Scalar>{a, b, c, ca, cb, cc, sa, sb, sc},
          Corner<Scalar>{b, c, a, cb, cc, ca, sb, sc, sa},
          Corner<Scalar>{c, a, b, cc, ca, cb, sc, sa, sb}};
}

template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> ratio_weights(int id, const std::array<Corner<Scalar>, 3>& k) {
  const std::array<Ratio<Scalar>, 3> r = {trilinear_ratio(id, k[0]), trilinear_ratio(id, k[1]),
                                          trilinear_ratio(id, k[2])};
  Eigen::Matrix<Scalar, 3, 1> w;
  for (int i = 0; i < 3; ++i) {
    w(i) = k[i].a * r[i].num * r[(i + 1) % 3].den * r[(i + 2) % 3].den;
  }
  return w;
}

}  // namespace detail

inline std::span<const int> supported_centers() {
  return {detail::kSupportedCenters.data(), detail::kSupportedCenters.size() - 1};
}

inline bool is_supported_center(int id) {
  const auto ids = supported_centers();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

inline std::string supported_centers_text() {
  std::string out;
  for (int id : supported_centers()) {
    if (!out.empty()) out += ",";
    out += std::to_string(id);
  }
  return out;
}

/// Barycentric weights of X(id); X(150) is the anticomplement of X(101).
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> center_barycentrics(const Triangle<Scalar>& t, int id) {
  if (!is_supported_center(id)) {
    throw ValidationError("unsupported triangle center X(" + std::to_string(id) +
                          "); supported: " + supported_centers_text());
  }
  const auto k = detail::corners(t);
  if (id == 150) {
    const Eigen::Matrix<Scalar, 3, 1> u = detail::ratio_weights<Scalar>(101, k);
    return Eigen::Matrix<Scalar, 3, 1>::Constant(u.sum()) - Scalar(2) * u;
  }
  return detail::ratio_weights<Scalar>(id, k);
}

template <typename Scalar>
Point2<Scalar> center_point(const Triangle<Scalar>& t, int id) {
  return barycentric_to_cartesian(t, center_barycentrics(t, id));
}

}  // namespace binv
