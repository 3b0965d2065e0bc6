#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzgrade/defuzz.hpp"
#include "fuzzgrade/fuzzy_core.hpp"

namespace fuzzgrade {

struct GradeBand {
  std::string label;
  double lo{}, hi{};
  std::string description;
};

/// Ordered, disjoint score bands partitioning [0, 100]. Scores falling
/// strictly between two bands (possible with non-integer scores) attach
/// to the band below.
class GradeScale {
 public:
  explicit GradeScale(std::vector<GradeBand> bands);

  const std::vector<GradeBand>& bands() const { return bands_; }

  // Throws DomainError("score out of range") outside [min_lo, max_hi].
  const GradeBand& band_of(double score) const;
  const GradeBand& band(const std::string& label) const;

 private:
  std::vector<GradeBand> bands_;  // ascending by lo
};

// The paper's five-band scale: A 85-100, B 75-84, C 60-74, D 50-59, F 0-49.
GradeScale default_scale();

std::string grade_of(double score, const GradeScale& scale);

struct ScoreRecord {
  std::string group_id;
  std::string student_id;
  std::string rater_id;  // empty when absent
  double score{};
};

enum class CalibrationMode { Midpoint, Empirical };

/// Per-label grade fuzzy numbers, in scale order. Labels calibrated by
/// midpoint fallback (empirical mode, empty band) are listed in
/// fallback_labels.
struct GradeFNMap {
  std::vector<std::pair<std::string, TriangularFN>> fns;
  std::vector<std::string> fallback_labels;

  const TriangularFN& at(const std::string& label) const;
};

// Midpoint mode: TFN (lo, (lo+hi)/2, hi) per band. Empirical mode:
// TFN (min, mean, max) of the scores observed in the band, with midpoint
// fallback for empty bands. Throws DomainError("no data") on empty input.
GradeFNMap calibrate_grade_fns(std::span<const ScoreRecord> records,
                               const GradeScale& scale, CalibrationMode mode);

using GradeCounts = std::map<std::string, long>;

GradeCounts count_grades(std::span<const ScoreRecord> records, const GradeScale& scale);

// (1/n) sum count(label) * TFN(label). Throws DomainError("no data") on
// zero total count.
TriangularFN group_mean_tfn(const GradeCounts& counts, const GradeFNMap& grade_fns);

// (a, b, c, d) with b/c the min/max score and a/d the support of the
// lowest/highest band touched by any score.
TrapezoidalFN individual_tpfn(std::span<const double> scores, const GradeScale& scale);

// Linguistic range, low label first: bands of (a, c) for a TFN, of the
// shoulders (b, c) for a TpFN.
std::pair<std::string, std::string> characterize(const TriangularFN& fn,
                                                 const GradeScale& scale);
std::pair<std::string, std::string> characterize(const TrapezoidalFN& fn,
                                                 const GradeScale& scale);

enum class FnModel { TFN, TpFN };

const char* to_string(FnModel model);

struct GroupAssessment {
  std::string group_id;
  FnModel model{FnModel::TFN};
  TrapezoidalFN fn;  // TFNs stored promoted (b = c)
  double centroid_x{};
  std::pair<std::string, std::string> linguistic_range;
  GradeCounts grade_counts;
};

struct RankedEntry {
  std::string id;
  double centroid_x{};
  int rank{};  // 1-based; tied entries share a rank
};

struct PairRelation {
  std::string lhs, rhs;
  ComparisonResult relation{};
};

struct Ranking {
  std::vector<RankedEntry> entries;  // descending centroid, ties by id
  std::vector<PairRelation> pairs;   // Definition-2 relation per pair
};

// Centroids within 1e-9 tie. Throws DomainError("no data") on empty input.
Ranking rank_groups(std::span<const GroupAssessment> assessments);

// Total order on defuzzified TpFNs. A degenerate TpFN surfaces as a
// DomainError naming the student.
Ranking rank_individuals(
    const std::vector<std::pair<std::string, TrapezoidalFN>>& students);

}  // namespace fuzzgrade
