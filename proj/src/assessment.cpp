#include "fuzzgrade/assessment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fuzzgrade {

namespace {
constexpr double kTieTolerance = 1e-9;
}

GradeScale::GradeScale(std::vector<GradeBand> bands) : bands_(std::move(bands)) {
  if (bands_.empty()) throw DomainError("grade scale has no bands");
  std::sort(bands_.begin(), bands_.end(),
            [](const GradeBand& l, const GradeBand& r) { return l.lo < r.lo; });
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    if (bands_[i].lo > bands_[i].hi) throw DomainError("grade band bounds out of order");
    if (i > 0 && bands_[i].lo <= bands_[i - 1].hi) {
      throw DomainError("grade bands overlap");
    }
  }
}

const GradeBand& GradeScale::band_of(double score) const {
  if (score < bands_.front().lo || score > bands_.back().hi) {
    throw DomainError("score out of range");
  }
  // containing band, else the band below (greatest hi <= score)
  const GradeBand* below = nullptr;
  for (const auto& band : bands_) {
    if (score >= band.lo && score <= band.hi) return band;
    if (band.hi <= score) below = &band;
  }
  if (below == nullptr) throw DomainError("score out of range");
  return *below;
}

const GradeBand& GradeScale::band(const std::string& label) const {
  for (const auto& b : bands_) {
    if (b.label == label) return b;
  }
  throw DomainError("unknown grade label: " + label);
}

GradeScale default_scale() {
  return GradeScale({
      {"F", 0.0, 49.0, "unsatisfactory"},
      {"D", 50.0, 59.0, "fair"},
      {"C", 60.0, 74.0, "good"},
      {"B", 75.0, 84.0, "very good"},
      {"A", 85.0, 100.0, "excellent"},
  });
}

std::string grade_of(double score, const GradeScale& scale) {
  return scale.band_of(score).label;
}

const TriangularFN& GradeFNMap::at(const std::string& label) const {
  for (const auto& [name, fn] : fns) {
    if (name == label) return fn;
  }
  throw DomainError("unknown grade label: " + label);
}

GradeFNMap calibrate_grade_fns(std::span<const ScoreRecord> records,
                               const GradeScale& scale, CalibrationMode mode) {
  if (records.empty()) throw DomainError("no data");

  struct BandStats {
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    long n = 0;
  };
  std::map<std::string, BandStats> stats;
  for (const auto& rec : records) {
    auto& s = stats[grade_of(rec.score, scale)];
    s.min = std::min(s.min, rec.score);
    s.max = std::max(s.max, rec.score);
    s.sum += rec.score;
    ++s.n;
  }

  GradeFNMap out;
  for (const auto& band : scale.bands()) {
    const TriangularFN midpoint{band.lo, 0.5 * (band.lo + band.hi), band.hi};
    if (mode == CalibrationMode::Midpoint) {
      out.fns.emplace_back(band.label, midpoint);
      continue;
    }
    const auto it = stats.find(band.label);
    if (it == stats.end()) {
      out.fns.emplace_back(band.label, midpoint);
      out.fallback_labels.push_back(band.label);
    } else {
      const auto& s = it->second;
      out.fns.emplace_back(band.label, TriangularFN{s.min, s.sum / s.n, s.max});
    }
  }
  return out;
}

GradeCounts count_grades(std::span<const ScoreRecord> records, const GradeScale& scale) {
  GradeCounts counts;
  for (const auto& band : scale.bands()) counts[band.label] = 0;
  for (const auto& rec : records) ++counts[grade_of(rec.score, scale)];
  return counts;
}

TriangularFN group_mean_tfn(const GradeCounts& counts, const GradeFNMap& grade_fns) {
  long total = 0;
  TriangularFN sum{0.0, 0.0, 0.0};
  for (const auto& [label, count] : counts) {
    if (count <= 0) continue;
    sum = add(sum, scalar_mul(static_cast<double>(count), grade_fns.at(label)));
    total += count;
  }
  if (total == 0) throw DomainError("no data");
  const double n = static_cast<double>(total);
  return {sum.a / n, sum.b / n, sum.c / n};
}

TrapezoidalFN individual_tpfn(std::span<const double> scores, const GradeScale& scale) {
  if (scores.empty()) throw DomainError("no data");
  double lo_score = scores[0], hi_score = scores[0];
  double band_lo = std::numeric_limits<double>::infinity();
  double band_hi = -std::numeric_limits<double>::infinity();
  for (double s : scores) {
    lo_score = std::min(lo_score, s);
    hi_score = std::max(hi_score, s);
    const auto& band = scale.band_of(s);
    band_lo = std::min(band_lo, band.lo);
    band_hi = std::max(band_hi, band.hi);
  }
  // a non-integer score in an inter-band gap attaches to the band below,
  // so the max score can exceed the touched band's hi; widen d to keep
  // the entries ordered
  return {std::min(band_lo, lo_score), lo_score, hi_score, std::max(band_hi, hi_score)};
}

std::pair<std::string, std::string> characterize(const TriangularFN& fn,
                                                 const GradeScale& scale) {
  return {grade_of(fn.a, scale), grade_of(fn.c, scale)};
}

std::pair<std::string, std::string> characterize(const TrapezoidalFN& fn,
                                                 const GradeScale& scale) {
  return {grade_of(fn.b, scale), grade_of(fn.c, scale)};
}

const char* to_string(FnModel model) {
  return model == FnModel::TFN ? "TFN" : "TpFN";
}

namespace {

Ranking rank_by_centroid(std::vector<RankedEntry> entries,
                         const std::vector<std::pair<std::string, TrapezoidalFN>>& fns) {
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& l, const RankedEntry& r) {
    if (l.centroid_x != r.centroid_x) return l.centroid_x > r.centroid_x;
    return l.id < r.id;
  });

  // group ties sequentially, then order each tie group by id
  std::size_t start = 0;
  while (start < entries.size()) {
    std::size_t end = start + 1;
    while (end < entries.size() &&
           std::abs(entries[end].centroid_x - entries[end - 1].centroid_x) <= kTieTolerance) {
      ++end;
    }
    std::sort(entries.begin() + start, entries.begin() + end,
              [](const RankedEntry& l, const RankedEntry& r) { return l.id < r.id; });
    for (std::size_t i = start; i < end; ++i) entries[i].rank = static_cast<int>(start) + 1;
    start = end;
  }

  Ranking out;
  out.entries = std::move(entries);
  auto fn_of = [&fns](const std::string& id) -> const TrapezoidalFN& {
    for (const auto& [name, fn] : fns) {
      if (name == id) return fn;
    }
    throw DomainError("unknown id in ranking: " + id);
  };
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < out.entries.size(); ++j) {
      out.pairs.push_back({out.entries[i].id, out.entries[j].id,
                           compare(fn_of(out.entries[i].id), fn_of(out.entries[j].id))});
    }
  }
  return out;
}

}  // namespace

Ranking rank_groups(std::span<const GroupAssessment> assessments) {
  if (assessments.empty()) throw DomainError("no data");
  std::vector<RankedEntry> entries;
  std::vector<std::pair<std::string, TrapezoidalFN>> fns;
  for (const auto& g : assessments) {
    entries.push_back({g.group_id, g.centroid_x, 0});
    fns.emplace_back(g.group_id, g.fn);
  }
  return rank_by_centroid(std::move(entries), fns);
}

Ranking rank_individuals(
    const std::vector<std::pair<std::string, TrapezoidalFN>>& students) {
  if (students.empty()) throw DomainError("no data");
  std::vector<RankedEntry> entries;
  for (const auto& [id, fn] : students) {
    try {
      entries.push_back({id, cog_tpfn(fn).x, 0});
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " for student " + id);
    }
  }
  return rank_by_centroid(std::move(entries), students);
}

}  // namespace fuzzgrade
