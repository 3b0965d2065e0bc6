#pragma once

#include <vector>

#include "fuzzgrade/fuzzy_core.hpp"

namespace fuzzgrade {

/// Center of gravity of the area between a membership graph and the x-axis.
/// For any triangle y = 1/3; for a trapezoid 1/3 <= y <= 1/2.
struct Centroid {
  double x{}, y{};
};

/// Breakpoint representation of a piecewise-linear membership function,
/// zero outside [points.front().x, points.back().x]. Used as the
/// numeric-integration oracle for the closed-form centroids.
struct PiecewiseLinearMembership {
  struct Point {
    double x{}, m{};
  };

  std::vector<Point> points;

  static PiecewiseLinearMembership from(const TriangularFN& fn);
  static PiecewiseLinearMembership from(const TrapezoidalFN& fn);

  double operator()(double x) const;
};

// X = (a+b+c)/3, Y = 1/3. Throws DomainError on zero support width.
Centroid cog_tfn(const TriangularFN& fn);

// X = (c^2+d^2-a^2-b^2+dc-ab) / (3(c+d-a-b)), Y = (2c+d-a-2b) / (3(c+d-a-b)).
// Throws DomainError when the area c+d-a-b vanishes.
Centroid cog_tpfn(const TrapezoidalFN& fn);

// Area centroid by composite Simpson quadrature with breakpoint-aligned
// panels: x = int x*m dx / int m dx, y = int m^2/2 dx / int m dx.
Centroid cog_numeric(const PiecewiseLinearMembership& m, int steps = 100000);

}  // namespace fuzzgrade
