#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "fuzzgrade/defuzz.hpp"

using namespace fuzzgrade;

namespace {

std::mt19937 rng(987654321);

TriangularFN random_tfn() {
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  std::array<double, 3> v{dist(rng), dist(rng), dist(rng)};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

TrapezoidalFN random_tpfn() {
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  std::array<double, 4> v{dist(rng), dist(rng), dist(rng), dist(rng)};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

TEST_CASE("TFN centroids from the worked example") {
  CHECK(cog_tfn({63.53, 71.74, 83.47}).x == doctest::Approx(72.91).epsilon(0.0002));
  CHECK(cog_tfn({65.88, 72.63, 79.53}).x == doctest::Approx(72.68).epsilon(0.0002));
  const auto c = cog_tfn({0, 1, 2});
  CHECK(c.x == doctest::Approx(1.0));
  CHECK(c.y == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("TpFN centroids") {
  CHECK(cog_tpfn({47, 64.2, 79, 86.6}).x == doctest::Approx(68.84).epsilon(0.0002));

  const auto sym = cog_tpfn({0, 1, 2, 3});
  CHECK(sym.x == doctest::Approx(1.5));
  CHECK(sym.y == doctest::Approx(5.0 / 12.0));

  const auto tri = cog_tpfn({1, 2, 2, 3});
  CHECK(tri.x == doctest::Approx(2.0));
  CHECK(tri.y == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("printed 68.13 contradicts both the closed form and the oracle") {
  const TrapezoidalFN sprime{47.8, 65.3, 78.1, 85.9};
  const auto closed = cog_tpfn(sprime);
  const auto numeric = cog_numeric(PiecewiseLinearMembership::from(sprime));
  CHECK(std::abs(closed.x - numeric.x) <= 1e-5);
  CHECK(closed.x == doctest::Approx(68.87).epsilon(0.0002));
  CHECK(std::abs(closed.x - 68.13) > 0.5);
}

TEST_CASE("numeric centroid on simple shapes") {
  const auto tri = cog_numeric(PiecewiseLinearMembership::from(TriangularFN{0, 1, 2}));
  CHECK(std::abs(tri.x - 1.0) <= 1e-6);
  CHECK(std::abs(tri.y - 1.0 / 3.0) <= 1e-6);

  const auto paper = cog_numeric(PiecewiseLinearMembership::from(TrapezoidalFN{47, 64.2, 79, 86.6}));
  CHECK(paper.x == doctest::Approx(68.84).epsilon(0.0002));

  const auto rect = cog_numeric(PiecewiseLinearMembership::from(TrapezoidalFN{0, 0, 2, 2}));
  CHECK(std::abs(rect.x - 1.0) <= 1e-6);
  CHECK(std::abs(rect.y - 0.5) <= 1e-6);
}

TEST_CASE("closed forms agree with the quadrature oracle") {
  for (int i = 0; i < 5000; ++i) {
    const auto fn = random_tfn();
    if (fn.a == fn.c) continue;
    const auto closed = cog_tfn(fn);
    const auto numeric = cog_numeric(PiecewiseLinearMembership::from(fn), 10000);
    CHECK(std::abs(closed.x - numeric.x) <= 1e-5);
    CHECK(std::abs(closed.y - numeric.y) <= 1e-5);
    CHECK(closed.y == 1.0 / 3.0);
  }
  for (int i = 0; i < 5000; ++i) {
    const auto fn = random_tpfn();
    const auto closed = cog_tpfn(fn);
    const auto numeric = cog_numeric(PiecewiseLinearMembership::from(fn), 10000);
    CHECK(std::abs(closed.x - numeric.x) <= 1e-5);
    CHECK(std::abs(closed.y - numeric.y) <= 1e-5);
    CHECK(closed.y >= 1.0 / 3.0 - 1e-12);
    CHECK(closed.y <= 0.5 + 1e-12);
    CHECK(closed.x >= fn.a);
    CHECK(closed.x <= fn.d);
  }
}

TEST_CASE("trapezoid with b = c reduces to the triangle formula") {
  for (int i = 0; i < 2000; ++i) {
    const auto t = random_tfn();
    if (t.a == t.c) continue;
    const auto tri = cog_tfn(t);
    const auto trap = cog_tpfn({t.a, t.b, t.b, t.c});
    CHECK(trap.x == doctest::Approx(tri.x).epsilon(1e-12));
    CHECK(trap.y == doctest::Approx(tri.y).epsilon(1e-12));
  }
}

TEST_CASE("TFN centroid is strictly increasing in each entry") {
  for (int i = 0; i < 2000; ++i) {
    const auto t = random_tfn();
    if (t.a == t.c) continue;
    const double x = cog_tfn(t).x;
    CHECK(cog_tfn({t.a + 0.5, std::max(t.b, t.a + 0.5), t.c}).x > x);
    CHECK(cog_tfn({t.a, t.b, t.c + 0.5}).x > x);
    if (t.b + 0.5 <= t.c) CHECK(cog_tfn({t.a, t.b + 0.5, t.c}).x > x);
  }
}

TEST_CASE("translation and positive-scale equivariance") {
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  std::uniform_real_distribution<double> scale(0.1, 5.0);
  for (int i = 0; i < 2000; ++i) {
    const auto fn = random_tpfn();
    const auto base = cog_tpfn(fn);
    const double k = shift(rng);
    const auto shifted = cog_tpfn(scalar_add(k, fn));
    CHECK(std::abs(shifted.x - (base.x + k)) <= 1e-9);
    CHECK(std::abs(shifted.y - base.y) <= 1e-9);
    const double s = scale(rng);
    const auto scaled = cog_tpfn(scalar_mul(s, fn));
    CHECK(std::abs(scaled.x - s * base.x) <= 1e-9 * std::max(1.0, s * std::abs(base.x)));
  }
}

TEST_CASE("degenerate shapes are rejected") {
  CHECK_THROWS_WITH_AS(cog_tfn({5, 5, 5}), "degenerate (zero-area) fuzzy number", DomainError);
  CHECK_THROWS_WITH_AS(cog_tpfn({5, 5, 5, 5}), "degenerate (zero-area) fuzzy number",
                       DomainError);
  CHECK_THROWS_AS(cog_numeric(PiecewiseLinearMembership::from(TriangularFN{5, 5, 5})),
                  DomainError);
  CHECK_THROWS_AS(cog_numeric(PiecewiseLinearMembership::from(TriangularFN{0, 1, 2}), 10),
                  DomainError);
}
