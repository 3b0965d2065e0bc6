#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "doctest.h"
#include "fuzzgrade/assessment.hpp"
#include "fuzzgrade/csv.hpp"

using namespace fuzzgrade;

namespace {

const char* kDataDir = FUZZGRADE_DATA_DIR;

std::vector<ScoreRecord> records_from_scores(std::initializer_list<double> scores,
                                             const std::string& group = "G") {
  std::vector<ScoreRecord> records;
  int i = 0;
  for (double s : scores) records.push_back({group, "s" + std::to_string(++i), "", s});
  return records;
}

std::mt19937 rng(5551212);

TriangularFN random_tfn() {
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  std::array<double, 3> v{dist(rng), dist(rng), dist(rng)};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

}  // namespace

TEST_CASE("default scale band boundaries") {
  const auto scale = default_scale();
  CHECK(grade_of(85, scale) == "A");
  CHECK(grade_of(84, scale) == "B");
  CHECK(grade_of(49, scale) == "F");
  CHECK(grade_of(0, scale) == "F");
  CHECK(grade_of(100, scale) == "A");
  CHECK(grade_of(84.5, scale) == "B");  // gap score attaches downward
  CHECK(grade_of(59.7, scale) == "D");
  CHECK_THROWS_WITH_AS(grade_of(101, scale), "score out of range", DomainError);
  CHECK_THROWS_AS(grade_of(-1, scale), DomainError);
}

TEST_CASE("scale validation") {
  CHECK_THROWS_AS(GradeScale({}), DomainError);
  CHECK_THROWS_AS(GradeScale({{"X", 10, 5, ""}}), DomainError);
  CHECK_THROWS_AS(GradeScale({{"X", 0, 50, ""}, {"Y", 40, 100, ""}}), DomainError);
}

TEST_CASE("midpoint calibration reproduces the published grade TFNs") {
  const auto map = calibrate_grade_fns(records_from_scores({50}), default_scale(),
                                       CalibrationMode::Midpoint);
  const auto check = [&map](const char* label, double a, double b, double c) {
    const auto& fn = map.at(label);
    CHECK(fn.a == a);
    CHECK(fn.b == b);
    CHECK(fn.c == c);
  };
  check("A", 85, 92.5, 100);
  check("B", 75, 79.5, 84);
  check("C", 60, 67, 74);
  check("D", 50, 54.5, 59);
  check("F", 0, 24.5, 49);
  CHECK(map.fallback_labels.empty());
}

TEST_CASE("empirical calibration uses min/mean/max with midpoint fallback") {
  // the D1 F-band scores: 48 x7, 45 x8, 42, 40 x3, 35
  std::vector<ScoreRecord> records;
  for (int i = 0; i < 7; ++i) records.push_back({"D1", "x", "", 48});
  for (int i = 0; i < 8; ++i) records.push_back({"D1", "x", "", 45});
  records.push_back({"D1", "x", "", 42});
  for (int i = 0; i < 3; ++i) records.push_back({"D1", "x", "", 40});
  records.push_back({"D1", "x", "", 35});

  const auto map = calibrate_grade_fns(records, default_scale(), CalibrationMode::Empirical);
  const auto& f = map.at("F");
  CHECK(f.a == 35);
  CHECK(f.b == doctest::Approx(893.0 / 20.0));
  CHECK(f.c == 48);

  // no A/B/C/D observations: midpoint fallback, flagged
  CHECK(map.fallback_labels == std::vector<std::string>{"D", "C", "B", "A"});
  CHECK(map.at("A").b == 92.5);

  const auto single = calibrate_grade_fns(records_from_scores({90}), default_scale(),
                                          CalibrationMode::Empirical);
  CHECK(single.at("A").a == 90);
  CHECK(single.at("A").b == 90);
  CHECK(single.at("A").c == 90);

  CHECK_THROWS_WITH_AS(
      calibrate_grade_fns({}, default_scale(), CalibrationMode::Empirical), "no data",
      DomainError);
}

TEST_CASE("grade counts for the bundled fixtures") {
  const auto scale = default_scale();
  const auto records =
      ingest_scores(std::filesystem::path(kDataDir) / "example1_scores.csv");
  std::vector<ScoreRecord> d1, d2;
  for (const auto& rec : records) (rec.group_id == "D1" ? d1 : d2).push_back(rec);
  const auto counts1 = count_grades(d1, scale);
  CHECK(counts1.at("A") == 60);
  CHECK(counts1.at("B") == 40);
  CHECK(counts1.at("C") == 20);
  CHECK(counts1.at("D") == 30);
  CHECK(counts1.at("F") == 20);
  const auto counts2 = count_grades(d2, scale);
  CHECK(counts2.at("A") == 60);
  CHECK(counts2.at("B") == 90);
  CHECK(counts2.at("C") == 45);
  CHECK(counts2.at("D") == 45);
  CHECK(counts2.at("F") == 15);

  const auto ex2 = ingest_scores(std::filesystem::path(kDataDir) / "example2_scores.csv");
  const auto counts = count_grades(ex2, scale);
  CHECK(counts.at("A") == 14);
  CHECK(counts.at("B") == 4);
  CHECK(counts.at("C") == 1);
  CHECK(counts.at("D") == 4);
  CHECK(counts.at("F") == 7);

  const auto empty = count_grades({}, scale);
  long total = 0;
  for (const auto& [label, n] : empty) total += n;
  CHECK(total == 0);
  CHECK(empty.size() == 5);
}

TEST_CASE("group mean TFN against the published aggregates") {
  const auto map = calibrate_grade_fns(records_from_scores({50}), default_scale(),
                                       CalibrationMode::Midpoint);

  const auto d1 = group_mean_tfn({{"A", 60}, {"B", 40}, {"C", 20}, {"D", 30}, {"F", 20}}, map);
  CHECK(d1.a == doctest::Approx(63.53).epsilon(0.0002));
  CHECK(d1.b == doctest::Approx(71.74).epsilon(0.0002));
  // published right entry 83.47 disagrees with the weighted mean
  CHECK(d1.c == doctest::Approx(13590.0 / 170.0).epsilon(1e-12));

  const auto d2 = group_mean_tfn({{"A", 60}, {"B", 90}, {"C", 45}, {"D", 45}, {"F", 15}}, map);
  CHECK(d2.a == doctest::Approx(65.88).epsilon(0.0002));
  CHECK(d2.c == doctest::Approx(79.53).epsilon(0.0002));
  // published middle entry 72.63; weighted mean gives 72.71
  CHECK(d2.b == doctest::Approx(18540.0 / 255.0).epsilon(1e-12));

  const auto m = group_mean_tfn({{"A", 14}, {"B", 4}, {"C", 1}, {"D", 4}, {"F", 7}}, map);
  CHECK(m.b == doctest::Approx(68.98).epsilon(0.0002));
  CHECK(m.c == doctest::Approx(79.63).epsilon(0.0002));
  // published left entry 60.33; weighted mean gives 58.33
  CHECK(m.a == doctest::Approx(1750.0 / 30.0).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(group_mean_tfn({{"A", 0}}, map), "no data", DomainError);

  const auto pure = group_mean_tfn({{"B", 17}}, map);
  CHECK(pure.a == 75);
  CHECK(pure.b == 79.5);
  CHECK(pure.c == 84);
}

TEST_CASE("individual trapezoids from the Olympiad scores") {
  const auto scale = default_scale();
  const auto check = [&scale](std::initializer_list<double> scores, double a, double b,
                              double c, double d) {
    const auto fn = individual_tpfn(std::vector<double>(scores), scale);
    CHECK(fn.a == a);
    CHECK(fn.b == b);
    CHECK(fn.c == c);
    CHECK(fn.d == d);
  };
  check({43, 48, 49, 49, 50, 52}, 0, 43, 52, 59);
  check({81, 83, 85, 88, 91, 95}, 75, 81, 95, 100);
  check({76, 82, 89, 95, 95, 98}, 75, 76, 98, 100);
  check({86, 86, 87, 87, 87, 88}, 85, 86, 88, 100);
  check({35, 40, 44, 52, 59, 62}, 0, 35, 62, 74);
  check({90}, 85, 90, 90, 100);
  CHECK_THROWS_WITH_AS(individual_tpfn({}, scale), "no data", DomainError);
}

TEST_CASE("individual_tpfn ordering invariant on random scores") {
  const auto scale = default_scale();
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  std::uniform_int_distribution<int> n_scores(1, 8);
  for (int i = 0; i < 2000; ++i) {
    std::vector<double> scores;
    for (int j = n_scores(rng); j > 0; --j) scores.push_back(dist(rng));
    const auto fn = individual_tpfn(scores, scale);
    CHECK(fn.a <= fn.b);
    CHECK(fn.b <= fn.c);
    CHECK(fn.c <= fn.d);
    CHECK(fn.b == *std::min_element(scores.begin(), scores.end()));
    CHECK(fn.c == *std::max_element(scores.begin(), scores.end()));
  }
}

TEST_CASE("linguistic characterization") {
  const auto scale = default_scale();
  CHECK(characterize(TriangularFN{63.53, 71.74, 83.47}, scale) ==
        std::pair<std::string, std::string>{"C", "B"});
  CHECK(characterize(TrapezoidalFN{47, 64.2, 79, 86.6}, scale) ==
        std::pair<std::string, std::string>{"C", "B"});
  CHECK(characterize(TriangularFN{85, 92.5, 100}, scale) ==
        std::pair<std::string, std::string>{"A", "A"});

  const auto map = calibrate_grade_fns(records_from_scores({50}), scale,
                                       CalibrationMode::Midpoint);
  for (const auto& [label, fn] : map.fns) {
    CHECK(characterize(fn, scale) == std::pair(label, label));
  }
}

TEST_CASE("group ranking follows the centroid order") {
  GroupAssessment d1{"D1", FnModel::TFN, TrapezoidalFN(TriangularFN{63.53, 71.74, 83.47}),
                     cog_tfn({63.53, 71.74, 83.47}).x, {"C", "B"}, {}};
  GroupAssessment d2{"D2", FnModel::TFN, TrapezoidalFN(TriangularFN{65.88, 72.63, 79.53}),
                     cog_tfn({65.88, 72.63, 79.53}).x, {"C", "B"}, {}};

  const std::vector<GroupAssessment> groups{d2, d1};
  const auto ranking = rank_groups(groups);
  REQUIRE(ranking.entries.size() == 2);
  CHECK(ranking.entries[0].id == "D1");
  CHECK(ranking.entries[0].rank == 1);
  CHECK(ranking.entries[1].id == "D2");
  CHECK(ranking.entries[1].rank == 2);
  REQUIRE(ranking.pairs.size() == 1);
  CHECK(ranking.pairs[0].relation == ComparisonResult::Incomparable);

  // permutation invariance
  const std::vector<GroupAssessment> swapped{d1, d2};
  const auto again = rank_groups(swapped);
  CHECK(again.entries[0].id == ranking.entries[0].id);
  CHECK(again.entries[1].rank == ranking.entries[1].rank);

  const std::vector<GroupAssessment> single{d1};
  CHECK(rank_groups(single).entries[0].rank == 1);

  GroupAssessment tied = d1;
  tied.group_id = "D0";
  const std::vector<GroupAssessment> ties{d1, tied};
  const auto tie_ranking = rank_groups(ties);
  CHECK(tie_ranking.entries[0].id == "D0");
  CHECK(tie_ranking.entries[0].rank == 1);
  CHECK(tie_ranking.entries[1].rank == 1);

  CHECK_THROWS_WITH_AS(rank_groups({}), "no data", DomainError);
}

TEST_CASE("individual ranking is total and deterministic") {
  const auto scale = default_scale();
  const std::vector<std::pair<std::string, TrapezoidalFN>> students{
      {"S1", {0, 43, 52, 59}},   {"S2", {75, 81, 95, 100}}, {"S3", {75, 76, 98, 100}},
      {"S4", {85, 86, 88, 100}}, {"S5", {0, 35, 62, 74}},
  };
  const auto ranking = rank_individuals(students);
  REQUIRE(ranking.entries.size() == 5);
  CHECK(ranking.entries[0].id == "S4");
  CHECK(ranking.entries[1].id == "S2");
  CHECK(ranking.entries[2].id == "S3");
  CHECK(ranking.entries[3].id == "S5");
  CHECK(ranking.entries[4].id == "S1");
  for (int i = 0; i < 5; ++i) CHECK(ranking.entries[i].rank == i + 1);

  const std::vector<std::pair<std::string, TrapezoidalFN>> twins{
      {"T1", {0, 1, 2, 3}}, {"T2", {0, 1, 2, 3}}};
  const auto tie = rank_individuals(twins);
  CHECK(tie.entries[0].rank == 1);
  CHECK(tie.entries[1].rank == 1);

  CHECK_THROWS_AS(rank_individuals({{"bad", {5, 5, 5, 5}}}), DomainError);
  try {
    rank_individuals({{"bad", {5, 5, 5, 5}}});
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("bad") != std::string::npos);
  }
}

TEST_CASE("defuzzified ranking never contradicts a comparable pair") {
  std::uniform_real_distribution<double> shift(0.0, 20.0);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_tfn();
    if (a.a == a.c) continue;
    std::array<double, 3> shifts{shift(rng), shift(rng), shift(rng)};
    std::sort(shifts.begin(), shifts.end());
    const TriangularFN b{a.a + shifts[0], a.b + shifts[1], a.c + shifts[2]};
    REQUIRE(compare(a, b) != ComparisonResult::GreaterOrEqual);
    CHECK(cog_tfn(a).x <= cog_tfn(b).x + 1e-9);
  }
}
