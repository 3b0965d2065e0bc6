#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fuzzgrade/assessment.hpp"

namespace fuzzgrade {

inline constexpr const char* kToolVersion = "1.0.0";

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitDomainError = 3;

enum class Command { Calibrate, AssessGroup, AssessIndividual, Compare };

struct RunConfig {
  Command command{Command::AssessGroup};
  std::vector<std::filesystem::path> inputs;  // score CSVs, or reports for compare
  std::optional<std::filesystem::path> scale_path;
  std::optional<std::filesystem::path> grades_path;
  CalibrationMode mode{CalibrationMode::Midpoint};
  std::optional<std::filesystem::path> output;  // absent or "-" means stdout
  std::string format{"json"};                   // "text" | "json"
  bool paper_fixtures{false};
  bool oracle_check{false};
};

struct ErrataNote {
  std::string subject;
  double printed{};
  double computed{};

  bool operator==(const ErrataNote&) const = default;
};

struct GroupEntry {
  std::string id;
  FnModel model{FnModel::TFN};
  std::vector<double> fn;  // 3 entries for TFN, 4 for TpFN
  double centroid_x{};
  std::pair<std::string, std::string> range;
  GradeCounts grade_counts;
  int rank{};

  bool operator==(const GroupEntry&) const = default;
};

struct StudentEntry {
  std::string id;
  std::string group;
  std::vector<double> fn;
  double centroid_x{};
  int rank{};

  bool operator==(const StudentEntry&) const = default;
};

struct PairNote {
  std::string lhs, rhs;
  std::string relation;

  bool operator==(const PairNote&) const = default;
};

struct ReportDocument {
  std::string version{kToolVersion};
  std::vector<GradeBand> scale;
  std::string calibration{"midpoint"};
  std::vector<GroupEntry> groups;
  std::vector<StudentEntry> students;
  std::vector<PairNote> pairs;
  std::vector<ErrataNote> errata;

  bool operator==(const ReportDocument&) const = default;

  std::string to_json() const;  // deterministic, 2-space indented
  static ReportDocument from_json(const std::string& text);

  void render_text(std::ostream& out) const;
};

bool operator==(const GradeBand& l, const GradeBand& r);

// Known divergences between the paper's printed aggregates and what its
// own formulas give. Matching is by fuzzy-number proximity (0.01 per
// entry) against either side, so both recomputed and verbatim tuples are
// recognized.
std::vector<ErrataNote> paper_errata(const TrapezoidalFN& fn, FnModel model);

// For golden-fixture mode: the paper's printed tuple for a recomputed
// group mean, when the mean matches a known fixture.
std::optional<TriangularFN> paper_printed_substitute(const TriangularFN& computed);

// Executes one CLI command. The report goes to config.output, or to
// `out` for stdout. Diagnostics go to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

GradeScale load_scale(const std::optional<std::filesystem::path>& path);

}  // namespace fuzzgrade
