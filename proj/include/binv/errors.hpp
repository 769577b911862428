#pragma once

#include <stdexcept>
#include <string>

namespace binv {

/// Bad caller input: nonpositive lengths, a < b, unsupported ids, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inversion center coincides with the point being inverted.
class SingularInversion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Degenerate geometry: zero-length sides, collinear triangles, points at
/// infinity, rank-deficient fits.
class DegenerateGeometry : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A line through the origin has no (u, v) form with ux + vy = 1.
class LineThroughCenter : public DegenerateGeometry {
 public:
  using DegenerateGeometry::DegenerateGeometry;
};

/// Newton / shooting failure, or a solved polygon that is not an orbit.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace binv
