#pragma once

#include <span>
#include <vector>

#include "fuzzgrade/errors.hpp"

namespace fuzzgrade {

/// Triangular fuzzy number (a, b, c): "approximately b".
/// Degenerate entries (a = b, b = c) are admitted; membership at a
/// zero-width ramp takes the peak/plateau value 1.
struct TriangularFN {
  double a{}, b{}, c{};

  TriangularFN() = default;
  TriangularFN(double a_, double b_, double c_);
};

/// Trapezoidal fuzzy number (a, b, c, d): "approximately in [b, c]".
/// A TriangularFN (a, b, c) embeds as the TpFN (a, b, b, c).
struct TrapezoidalFN {
  double a{}, b{}, c{}, d{};

  TrapezoidalFN() = default;
  TrapezoidalFN(double a_, double b_, double c_, double d_);
  explicit TrapezoidalFN(const TriangularFN& t) : a(t.a), b(t.b), c(t.b), d(t.c) {}
};

struct AlphaLevel {
  double value{};

  AlphaLevel() = default;
  explicit AlphaLevel(double v);
};

struct ClosedInterval {
  double lo{}, hi{};
};

enum class ComparisonResult {
  LessOrEqual,
  GreaterOrEqual,
  Equivalent,
  Incomparable,
};

const char* to_string(ComparisonResult r);

double membership(const TriangularFN& fn, double x);
double membership(const TrapezoidalFN& fn, double x);

ClosedInterval alpha_cut(const TriangularFN& fn, AlphaLevel alpha);
ClosedInterval alpha_cut(const TrapezoidalFN& fn, AlphaLevel alpha);

// Entrywise partial order: A <= B iff every entry of A <= the matching
// entry of B. Mixed shapes are handled by promoting the TFN.
ComparisonResult compare(const TrapezoidalFN& lhs, const TrapezoidalFN& rhs);
ComparisonResult compare(const TriangularFN& lhs, const TriangularFN& rhs);

TriangularFN add(const TriangularFN& lhs, const TriangularFN& rhs);
TrapezoidalFN add(const TrapezoidalFN& lhs, const TrapezoidalFN& rhs);

TriangularFN opposite(const TriangularFN& fn);
TrapezoidalFN opposite(const TrapezoidalFN& fn);

TriangularFN subtract(const TriangularFN& lhs, const TriangularFN& rhs);
TrapezoidalFN subtract(const TrapezoidalFN& lhs, const TrapezoidalFN& rhs);

TriangularFN scalar_add(double k, const TriangularFN& fn);
TrapezoidalFN scalar_add(double k, const TrapezoidalFN& fn);

// Entries reverse when k < 0; k = 0 yields the all-zero FN.
TriangularFN scalar_mul(double k, const TriangularFN& fn);
TrapezoidalFN scalar_mul(double k, const TrapezoidalFN& fn);

// (1/n)(A1 + ... + An). Throws DomainError("empty input") on an empty span.
TriangularFN mean_fn(std::span<const TriangularFN> fns);
TrapezoidalFN mean_fn(std::span<const TrapezoidalFN> fns);

}  // namespace fuzzgrade
