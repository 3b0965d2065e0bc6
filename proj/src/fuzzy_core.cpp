#include "fuzzgrade/fuzzy_core.hpp"

namespace fuzzgrade {

TriangularFN::TriangularFN(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(a <= b && b <= c)) {
    throw DomainError("triangular fuzzy number entries out of order");
  }
}

TrapezoidalFN::TrapezoidalFN(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  if (!(a <= b && b <= c && c <= d)) {
    throw DomainError("trapezoidal fuzzy number entries out of order");
  }
}

AlphaLevel::AlphaLevel(double v) : value(v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError("alpha level outside [0, 1]");
  }
}

const char* to_string(ComparisonResult r) {
  switch (r) {
    case ComparisonResult::LessOrEqual:
      return "less_or_equal";
    case ComparisonResult::GreaterOrEqual:
      return "greater_or_equal";
    case ComparisonResult::Equivalent:
      return "equivalent";
    case ComparisonResult::Incomparable:
      return "incomparable";
  }
  return "incomparable";
}

double membership(const TrapezoidalFN& fn, double x) {
  if (x < fn.a || x > fn.d) return 0.0;
  if (x >= fn.b && x <= fn.c) return 1.0;  // plateau wins on zero-width ramps
  if (x < fn.b) return (x - fn.a) / (fn.b - fn.a);
  return (fn.d - x) / (fn.d - fn.c);
}

double membership(const TriangularFN& fn, double x) {
  return membership(TrapezoidalFN(fn), x);
}

ClosedInterval alpha_cut(const TrapezoidalFN& fn, AlphaLevel alpha) {
  const double t = alpha.value;
  return {fn.a + t * (fn.b - fn.a), fn.d - t * (fn.d - fn.c)};
}

ClosedInterval alpha_cut(const TriangularFN& fn, AlphaLevel alpha) {
  return alpha_cut(TrapezoidalFN(fn), alpha);
}

ComparisonResult compare(const TrapezoidalFN& lhs, const TrapezoidalFN& rhs) {
  const bool le = lhs.a <= rhs.a && lhs.b <= rhs.b && lhs.c <= rhs.c && lhs.d <= rhs.d;
  const bool ge = lhs.a >= rhs.a && lhs.b >= rhs.b && lhs.c >= rhs.c && lhs.d >= rhs.d;
  if (le && ge) return ComparisonResult::Equivalent;
  if (le) return ComparisonResult::LessOrEqual;
  if (ge) return ComparisonResult::GreaterOrEqual;
  return ComparisonResult::Incomparable;
}

ComparisonResult compare(const TriangularFN& lhs, const TriangularFN& rhs) {
  return compare(TrapezoidalFN(lhs), TrapezoidalFN(rhs));
}

TriangularFN add(const TriangularFN& lhs, const TriangularFN& rhs) {
  return {lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c};
}

TrapezoidalFN add(const TrapezoidalFN& lhs, const TrapezoidalFN& rhs) {
  return {lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c, lhs.d + rhs.d};
}

TriangularFN opposite(const TriangularFN& fn) {
  return {-fn.c, -fn.b, -fn.a};
}

TrapezoidalFN opposite(const TrapezoidalFN& fn) {
  return {-fn.d, -fn.c, -fn.b, -fn.a};
}

TriangularFN subtract(const TriangularFN& lhs, const TriangularFN& rhs) {
  return add(lhs, opposite(rhs));
}

TrapezoidalFN subtract(const TrapezoidalFN& lhs, const TrapezoidalFN& rhs) {
  return add(lhs, opposite(rhs));
}

TriangularFN scalar_add(double k, const TriangularFN& fn) {
  return {k + fn.a, k + fn.b, k + fn.c};
}

TrapezoidalFN scalar_add(double k, const TrapezoidalFN& fn) {
  return {k + fn.a, k + fn.b, k + fn.c, k + fn.d};
}

TriangularFN scalar_mul(double k, const TriangularFN& fn) {
  if (k < 0.0) return {k * fn.c, k * fn.b, k * fn.a};
  return {k * fn.a, k * fn.b, k * fn.c};
}

TrapezoidalFN scalar_mul(double k, const TrapezoidalFN& fn) {
  if (k < 0.0) return {k * fn.d, k * fn.c, k * fn.b, k * fn.a};
  return {k * fn.a, k * fn.b, k * fn.c, k * fn.d};
}

TriangularFN mean_fn(std::span<const TriangularFN> fns) {
  if (fns.empty()) throw DomainError("empty input");
  TriangularFN sum = fns[0];
  for (std::size_t i = 1; i < fns.size(); ++i) sum = add(sum, fns[i]);
  const double n = static_cast<double>(fns.size());
  return {sum.a / n, sum.b / n, sum.c / n};
}

TrapezoidalFN mean_fn(std::span<const TrapezoidalFN> fns) {
  if (fns.empty()) throw DomainError("empty input");
  TrapezoidalFN sum = fns[0];
  for (std::size_t i = 1; i < fns.size(); ++i) sum = add(sum, fns[i]);
  const double n = static_cast<double>(fns.size());
  return {sum.a / n, sum.b / n, sum.c / n, sum.d / n};
}

}  // namespace fuzzgrade
