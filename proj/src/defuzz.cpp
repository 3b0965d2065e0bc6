#include "fuzzgrade/defuzz.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzgrade {

namespace {

void push_point(std::vector<PiecewiseLinearMembership::Point>& pts, double x, double m) {
  // keep abscissas strictly increasing; a collapsed ramp keeps the
  // plateau-side value
  if (!pts.empty() && pts.back().x == x) {
    pts.back().m = std::max(pts.back().m, m);
    return;
  }
  pts.push_back({x, m});
}

}  // namespace

PiecewiseLinearMembership PiecewiseLinearMembership::from(const TriangularFN& fn) {
  return from(TrapezoidalFN(fn));
}

PiecewiseLinearMembership PiecewiseLinearMembership::from(const TrapezoidalFN& fn) {
  PiecewiseLinearMembership out;
  push_point(out.points, fn.a, fn.a == fn.b ? 1.0 : 0.0);
  push_point(out.points, fn.b, 1.0);
  push_point(out.points, fn.c, 1.0);
  push_point(out.points, fn.d, fn.c == fn.d ? 1.0 : 0.0);
  return out;
}

double PiecewiseLinearMembership::operator()(double x) const {
  if (points.empty() || x < points.front().x || x > points.back().x) return 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (x <= points[i].x) {
      const auto& p = points[i - 1];
      const auto& q = points[i];
      const double t = (x - p.x) / (q.x - p.x);
      return p.m + t * (q.m - p.m);
    }
  }
  return points.back().m;
}

Centroid cog_tfn(const TriangularFN& fn) {
  if (fn.a == fn.c) throw DomainError("degenerate (zero-area) fuzzy number");
  return {(fn.a + fn.b + fn.c) / 3.0, 1.0 / 3.0};
}

Centroid cog_tpfn(const TrapezoidalFN& fn) {
  const double twice_area = fn.c + fn.d - fn.a - fn.b;
  if (twice_area <= 0.0) throw DomainError("degenerate (zero-area) fuzzy number");
  const double x = (fn.c * fn.c + fn.d * fn.d - fn.a * fn.a - fn.b * fn.b +
                    fn.d * fn.c - fn.b * fn.a) /
                   (3.0 * twice_area);
  const double y = (2.0 * fn.c + fn.d - fn.a - 2.0 * fn.b) / (3.0 * twice_area);
  return {x, y};
}

Centroid cog_numeric(const PiecewiseLinearMembership& m, int steps) {
  if (steps < 1000) throw DomainError("quadrature step count below 1000");
  if (m.points.size() < 2) throw DomainError("degenerate (zero-area) fuzzy number");

  const double lo = m.points.front().x;
  const double hi = m.points.back().x;
  const double total_width = hi - lo;
  if (total_width <= 0.0) throw DomainError("degenerate (zero-area) fuzzy number");

  double area = 0.0;
  double moment_x = 0.0;
  double moment_y = 0.0;

  // Panels are aligned to breakpoints so each Simpson substep sees a
  // single linear piece; the integrands are then at most quadratic and
  // integrated exactly up to rounding.
  for (std::size_t i = 1; i < m.points.size(); ++i) {
    const double x0 = m.points[i - 1].x;
    const double x1 = m.points[i].x;
    const double width = x1 - x0;
    if (width <= 0.0) continue;
    const int n = std::max(1, static_cast<int>(std::lround(steps * width / total_width)));
    const double h = width / n;
    for (int k = 0; k < n; ++k) {
      const double xa = x0 + k * h;
      const double xb = xa + h;
      const double xm = 0.5 * (xa + xb);
      const double ma = m(xa), mm = m(xm), mb = m(xb);
      area += h / 6.0 * (ma + 4.0 * mm + mb);
      moment_x += h / 6.0 * (xa * ma + 4.0 * xm * mm + xb * mb);
      moment_y += h / 6.0 * (0.5 * (ma * ma + 4.0 * mm * mm + mb * mb));
    }
  }

  if (area <= 0.0) throw DomainError("degenerate (zero-area) fuzzy number");
  return {moment_x / area, moment_y / area};
}

}  // namespace fuzzgrade
