#include "fuzzgrade/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fuzzgrade/csv.hpp"
#include "json.hpp"

namespace fuzzgrade {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string format_2dp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

ordered_json scale_to_json(const std::vector<GradeBand>& bands) {
  ordered_json arr = ordered_json::array();
  for (const auto& b : bands) {
    arr.push_back({{"label", b.label}, {"lo", b.lo}, {"hi", b.hi}, {"description", b.description}});
  }
  return arr;
}

std::vector<GradeBand> scale_from_json(const ordered_json& arr) {
  std::vector<GradeBand> bands;
  for (const auto& item : arr) {
    bands.push_back({item.at("label").get<std::string>(), item.at("lo").get<double>(),
                     item.at("hi").get<double>(),
                     item.value("description", std::string())});
  }
  return bands;
}

}  // namespace

bool operator==(const GradeBand& l, const GradeBand& r) {
  return l.label == r.label && l.lo == r.lo && l.hi == r.hi && l.description == r.description;
}

std::string ReportDocument::to_json() const {
  ordered_json doc;
  doc["version"] = version;
  doc["scale"] = scale_to_json(scale);
  doc["calibration"] = calibration;
  doc["groups"] = ordered_json::array();
  for (const auto& g : groups) {
    ordered_json counts = ordered_json::object();
    for (const auto& [label, n] : g.grade_counts) counts[label] = n;
    doc["groups"].push_back({{"id", g.id},
                             {"model", to_string(g.model)},
                             {"fn", g.fn},
                             {"centroid_x", g.centroid_x},
                             {"centroid_x_display", format_2dp(g.centroid_x)},
                             {"range", {g.range.first, g.range.second}},
                             {"grade_counts", counts},
                             {"rank", g.rank}});
  }
  doc["students"] = ordered_json::array();
  for (const auto& s : students) {
    doc["students"].push_back({{"id", s.id},
                               {"group", s.group},
                               {"fn", s.fn},
                               {"centroid_x", s.centroid_x},
                               {"centroid_x_display", format_2dp(s.centroid_x)},
                               {"rank", s.rank}});
  }
  doc["pairs"] = ordered_json::array();
  for (const auto& p : pairs) {
    doc["pairs"].push_back({{"lhs", p.lhs}, {"rhs", p.rhs}, {"relation", p.relation}});
  }
  doc["errata"] = ordered_json::array();
  for (const auto& e : errata) {
    doc["errata"].push_back(
        {{"subject", e.subject}, {"printed", e.printed}, {"computed", e.computed}});
  }
  return doc.dump(2) + "\n";
}

ReportDocument ReportDocument::from_json(const std::string& text) {
  ReportDocument doc;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
    doc.version = j.at("version").get<std::string>();
    doc.scale = scale_from_json(j.at("scale"));
    doc.calibration = j.at("calibration").get<std::string>();
    for (const auto& g : j.at("groups")) {
      GroupEntry entry;
      entry.id = g.at("id").get<std::string>();
      entry.model = g.at("model").get<std::string>() == "TpFN" ? FnModel::TpFN : FnModel::TFN;
      entry.fn = g.at("fn").get<std::vector<double>>();
      entry.centroid_x = g.at("centroid_x").get<double>();
      entry.range = {g.at("range").at(0).get<std::string>(),
                     g.at("range").at(1).get<std::string>()};
      for (const auto& [label, n] : g.at("grade_counts").items()) {
        entry.grade_counts[label] = n.get<long>();
      }
      entry.rank = g.at("rank").get<int>();
      doc.groups.push_back(std::move(entry));
    }
    for (const auto& s : j.at("students")) {
      doc.students.push_back({s.at("id").get<std::string>(), s.at("group").get<std::string>(),
                              s.at("fn").get<std::vector<double>>(),
                              s.at("centroid_x").get<double>(), s.at("rank").get<int>()});
    }
    for (const auto& p : j.at("pairs")) {
      doc.pairs.push_back({p.at("lhs").get<std::string>(), p.at("rhs").get<std::string>(),
                           p.at("relation").get<std::string>()});
    }
    for (const auto& e : j.at("errata")) {
      doc.errata.push_back({e.at("subject").get<std::string>(), e.at("printed").get<double>(),
                            e.at("computed").get<double>()});
    }
  } catch (const ordered_json::exception& ex) {
    throw ParseError(std::string("malformed report JSON: ") + ex.what());
  }
  return doc;
}

void ReportDocument::render_text(std::ostream& out) const {
  out << "rank  id  centroid_x  range\n";
  for (const auto& g : groups) {
    out << g.rank << "  " << g.id << "  " << format_2dp(g.centroid_x) << "  ["
        << g.range.first << ", " << g.range.second << "]\n";
  }
  for (const auto& s : students) {
    out << s.rank << "  " << s.id << "  " << format_2dp(s.centroid_x) << "\n";
  }
  if (!pairs.empty()) {
    out << "pairs:\n";
    for (const auto& p : pairs) {
      out << "  " << p.lhs << " vs " << p.rhs << ": " << p.relation << "\n";
    }
  }
  if (!errata.empty()) {
    out << "errata:\n";
    for (const auto& e : errata) {
      out << "  " << e.subject << ": printed " << format_2dp(e.printed) << ", computed "
          << format_2dp(e.computed) << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Paper fixture tables

namespace {

struct MeanFixture {
  const char* name;
  TriangularFN printed;
  TriangularFN computed;
};

const MeanFixture kMeanFixtures[] = {
    {"Example 1 D1 mean TFN",
     {63.53, 71.74, 83.47},
     {10800.0 / 170.0, 12195.0 / 170.0, 13590.0 / 170.0}},
    {"Example 1 D2 mean TFN",
     {65.88, 72.63, 79.53},
     {16800.0 / 255.0, 18540.0 / 255.0, 20280.0 / 255.0}},
    {"Example 2 M mean TFN",
     {60.33, 68.98, 79.63},
     {1750.0 / 30.0, 2069.5 / 30.0, 2389.0 / 30.0}},
};

struct CentroidFixture {
  const char* name;
  TrapezoidalFN fn;
  double printed_x;
};

const CentroidFixture kCentroidFixtures[] = {
    {"Example 3 S' centroid x", {47.8, 65.3, 78.1, 85.9}, 68.13},
};

bool near(const TrapezoidalFN& l, const TrapezoidalFN& r, double tol) {
  return std::abs(l.a - r.a) <= tol && std::abs(l.b - r.b) <= tol &&
         std::abs(l.c - r.c) <= tol && std::abs(l.d - r.d) <= tol;
}

constexpr double kMatchTolerance = 0.01;
constexpr double kDivergenceThreshold = 0.005;

}  // namespace

std::vector<ErrataNote> paper_errata(const TrapezoidalFN& fn, FnModel model) {
  std::vector<ErrataNote> notes;
  if (model == FnModel::TFN) {
    for (const auto& fx : kMeanFixtures) {
      const TrapezoidalFN printed(fx.printed);
      const TrapezoidalFN computed(fx.computed);
      if (!near(fn, printed, kMatchTolerance) && !near(fn, computed, kMatchTolerance)) continue;
      const char* entry_names[] = {"left entry", "middle entry", "right entry"};
      const double printed_entries[] = {fx.printed.a, fx.printed.b, fx.printed.c};
      const double computed_entries[] = {fx.computed.a, fx.computed.b, fx.computed.c};
      for (int i = 0; i < 3; ++i) {
        if (std::abs(printed_entries[i] - computed_entries[i]) > kDivergenceThreshold) {
          notes.push_back({std::string(fx.name) + " " + entry_names[i], printed_entries[i],
                           computed_entries[i]});
        }
      }
      break;
    }
  } else {
    for (const auto& fx : kCentroidFixtures) {
      if (!near(fn, fx.fn, kMatchTolerance)) continue;
      notes.push_back({fx.name, fx.printed_x, cog_tpfn(fx.fn).x});
      break;
    }
  }
  return notes;
}

std::optional<TriangularFN> paper_printed_substitute(const TriangularFN& computed) {
  for (const auto& fx : kMeanFixtures) {
    if (near(TrapezoidalFN(computed), TrapezoidalFN(fx.computed), kMatchTolerance)) {
      return fx.printed;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Command orchestration

namespace {

GradeScale scale_from_bands(std::vector<GradeBand> bands) {
  try {
    return GradeScale(std::move(bands));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid grade scale: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GradeFNMap load_grades(const std::filesystem::path& path) {
  GradeFNMap map;
  try {
    const auto j = ordered_json::parse(read_file(path));
    for (const auto& g : j.at("grades")) {
      const auto fn = g.at("fn").get<std::vector<double>>();
      if (fn.size() != 3) throw ParseError("grade fn must have 3 entries");
      map.fns.emplace_back(g.at("label").get<std::string>(),
                           TriangularFN(fn[0], fn[1], fn[2]));
      if (g.value("fallback", false)) map.fallback_labels.push_back(g.at("label"));
    }
  } catch (const ordered_json::exception& ex) {
    throw ParseError(std::string("malformed grades JSON: ") + ex.what());
  }
  return map;
}

void check_oracle(const TrapezoidalFN& fn, const Centroid& closed, const std::string& what) {
  const Centroid numeric = cog_numeric(PiecewiseLinearMembership::from(fn));
  if (std::abs(closed.x - numeric.x) > 1e-5 || std::abs(closed.y - numeric.y) > 1e-5) {
    throw DomainError("oracle check failed for " + what);
  }
}

void append_unique(std::vector<ErrataNote>& dst, std::vector<ErrataNote> src) {
  for (auto& note : src) {
    const bool seen = std::any_of(dst.begin(), dst.end(), [&note](const ErrataNote& e) {
      return e.subject == note.subject;
    });
    if (!seen) dst.push_back(std::move(note));
  }
}

std::vector<ScoreRecord> ingest_all(const std::vector<std::filesystem::path>& paths) {
  if (paths.empty()) throw ParseError("no input file given");
  std::vector<ScoreRecord> records;
  for (const auto& path : paths) {
    auto batch = ingest_scores(path);
    records.insert(records.end(), batch.begin(), batch.end());
  }
  return records;
}

std::vector<PairNote> pair_notes(const Ranking& ranking) {
  std::vector<PairNote> notes;
  for (const auto& p : ranking.pairs) {
    notes.push_back({p.lhs, p.rhs, to_string(p.relation)});
  }
  return notes;
}

std::vector<GroupAssessment> assess_groups(const std::vector<ScoreRecord>& records,
                                           const GradeScale& scale,
                                           const GradeFNMap& grade_fns, bool paper_fixtures,
                                           bool oracle, std::vector<ErrataNote>& errata) {
  std::map<std::string, std::vector<ScoreRecord>> by_group;
  for (const auto& rec : records) by_group[rec.group_id].push_back(rec);
  if (by_group.empty()) throw DomainError("no data");

  std::vector<GroupAssessment> assessments;
  for (const auto& [group_id, group_records] : by_group) {
    const auto counts = count_grades(group_records, scale);
    TriangularFN mean = group_mean_tfn(counts, grade_fns);
    append_unique(errata, paper_errata(TrapezoidalFN(mean), FnModel::TFN));
    if (paper_fixtures) {
      if (const auto printed = paper_printed_substitute(mean)) mean = *printed;
    }
    const Centroid centroid = cog_tfn(mean);
    if (oracle) check_oracle(TrapezoidalFN(mean), centroid, "group " + group_id);
    assessments.push_back({group_id, FnModel::TFN, TrapezoidalFN(mean), centroid.x,
                           characterize(mean, scale), counts});
  }
  return assessments;
}

void fill_group_entries(ReportDocument& doc, const std::vector<GroupAssessment>& assessments,
                        const Ranking& ranking) {
  for (const auto& entry : ranking.entries) {
    const auto it = std::find_if(
        assessments.begin(), assessments.end(),
        [&entry](const GroupAssessment& g) { return g.group_id == entry.id; });
    const GroupAssessment& g = *it;
    std::vector<double> fn = g.model == FnModel::TFN
                                 ? std::vector<double>{g.fn.a, g.fn.b, g.fn.d}
                                 : std::vector<double>{g.fn.a, g.fn.b, g.fn.c, g.fn.d};
    doc.groups.push_back({g.group_id, g.model, std::move(fn), entry.centroid_x,
                          g.linguistic_range, g.grade_counts, entry.rank});
  }
}

ordered_json grade_map_to_json(const GradeFNMap& map, const GradeScale& scale,
                               CalibrationMode mode) {
  ordered_json doc;
  doc["version"] = kToolVersion;
  doc["scale"] = scale_to_json(scale.bands());
  doc["calibration"] = mode == CalibrationMode::Midpoint ? "midpoint" : "empirical";
  doc["grades"] = ordered_json::array();
  for (const auto& [label, fn] : map.fns) {
    const bool fallback = std::find(map.fallback_labels.begin(), map.fallback_labels.end(),
                                    label) != map.fallback_labels.end();
    doc["grades"].push_back(
        {{"label", label}, {"fn", {fn.a, fn.b, fn.c}}, {"fallback", fallback}});
  }
  return doc;
}

ReportDocument run_assess_group(const RunConfig& cfg) {
  const GradeScale scale = load_scale(cfg.scale_path);
  const auto records = ingest_all(cfg.inputs);
  const GradeFNMap grade_fns = cfg.grades_path
                                   ? load_grades(*cfg.grades_path)
                                   : calibrate_grade_fns(records, scale, cfg.mode);
  ReportDocument doc;
  doc.scale = scale.bands();
  doc.calibration = cfg.grades_path ? "file" : (cfg.mode == CalibrationMode::Midpoint
                                                    ? "midpoint"
                                                    : "empirical");
  const auto assessments = assess_groups(records, scale, grade_fns, cfg.paper_fixtures,
                                         cfg.oracle_check, doc.errata);
  const Ranking ranking = rank_groups(assessments);
  fill_group_entries(doc, assessments, ranking);
  doc.pairs = pair_notes(ranking);
  return doc;
}

ReportDocument run_assess_individual(const RunConfig& cfg) {
  const GradeScale scale = load_scale(cfg.scale_path);
  const auto records = ingest_all(cfg.inputs);
  if (records.empty()) throw DomainError("no data");

  std::map<std::string, std::map<std::string, std::vector<double>>> by_group;
  for (const auto& rec : records) {
    by_group[rec.group_id][rec.student_id].push_back(rec.score);
  }

  // student ids must be unique in the ranking; qualify with the group when
  // the same id appears in several groups
  std::map<std::string, int> id_uses;
  for (const auto& [group_id, students] : by_group) {
    for (const auto& [student_id, scores] : students) ++id_uses[student_id];
  }

  ReportDocument doc;
  doc.scale = scale.bands();
  doc.calibration = "none";

  std::vector<std::pair<std::string, TrapezoidalFN>> student_fns;
  std::vector<std::pair<std::string, std::string>> student_groups;  // ranked id -> group
  std::vector<GroupAssessment> group_assessments;
  for (const auto& [group_id, students] : by_group) {
    std::vector<TrapezoidalFN> member_fns;
    for (const auto& [student_id, scores] : students) {
      const TrapezoidalFN fn = individual_tpfn(scores, scale);
      const std::string ranked_id =
          id_uses[student_id] > 1 ? group_id + "/" + student_id : student_id;
      student_fns.emplace_back(ranked_id, fn);
      student_groups.emplace_back(ranked_id, group_id);
      member_fns.push_back(fn);
    }
    const TrapezoidalFN mean = mean_fn(std::span<const TrapezoidalFN>(member_fns));
    append_unique(doc.errata, paper_errata(mean, FnModel::TpFN));
    const Centroid centroid = cog_tpfn(mean);
    if (cfg.oracle_check) check_oracle(mean, centroid, "group " + group_id);
    GradeCounts counts;
    {
      std::vector<ScoreRecord> group_records;
      for (const auto& rec : records) {
        if (rec.group_id == group_id) group_records.push_back(rec);
      }
      counts = count_grades(group_records, scale);
    }
    group_assessments.push_back({group_id, FnModel::TpFN, mean, centroid.x,
                                 characterize(mean, scale), counts});
  }

  const Ranking group_ranking = rank_groups(group_assessments);
  fill_group_entries(doc, group_assessments, group_ranking);

  const Ranking student_ranking = rank_individuals(student_fns);
  for (const auto& entry : student_ranking.entries) {
    const auto fn_it = std::find_if(
        student_fns.begin(), student_fns.end(),
        [&entry](const auto& pair) { return pair.first == entry.id; });
    const auto group_it = std::find_if(
        student_groups.begin(), student_groups.end(),
        [&entry](const auto& pair) { return pair.first == entry.id; });
    const TrapezoidalFN& fn = fn_it->second;
    if (cfg.oracle_check) check_oracle(fn, cog_tpfn(fn), "student " + entry.id);
    doc.students.push_back({entry.id, group_it->second,
                            {fn.a, fn.b, fn.c, fn.d}, entry.centroid_x, entry.rank});
  }
  doc.pairs = pair_notes(group_ranking);
  auto student_pairs = pair_notes(student_ranking);
  doc.pairs.insert(doc.pairs.end(), student_pairs.begin(), student_pairs.end());
  return doc;
}

ReportDocument run_compare(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw ParseError("no input file given");
  const GradeScale scale = load_scale(cfg.scale_path);

  std::vector<GroupAssessment> assessments;
  std::vector<ErrataNote> errata;
  auto unique_id = [&assessments](std::string id) {
    std::string candidate = id;
    int n = 1;
    while (std::any_of(assessments.begin(), assessments.end(),
                       [&candidate](const GroupAssessment& g) {
                         return g.group_id == candidate;
                       })) {
      candidate = id + "#" + std::to_string(++n);
    }
    return candidate;
  };

  for (const auto& path : cfg.inputs) {
    if (path.extension() == ".csv") {
      const auto records = ingest_scores(path);
      const GradeFNMap grade_fns = calibrate_grade_fns(records, scale, cfg.mode);
      for (auto& g : assess_groups(records, scale, grade_fns, cfg.paper_fixtures,
                                   cfg.oracle_check, errata)) {
        g.group_id = unique_id(g.group_id);
        assessments.push_back(std::move(g));
      }
      continue;
    }
    const ReportDocument report = ReportDocument::from_json(read_file(path));
    for (const auto& g : report.groups) {
      TrapezoidalFN fn = g.fn.size() == 3 ? TrapezoidalFN(TriangularFN(g.fn[0], g.fn[1], g.fn[2]))
                                          : TrapezoidalFN(g.fn[0], g.fn[1], g.fn[2], g.fn[3]);
      const Centroid centroid = g.model == FnModel::TFN
                                    ? cog_tfn(TriangularFN(fn.a, fn.b, fn.d))
                                    : cog_tpfn(fn);
      if (cfg.oracle_check) check_oracle(fn, centroid, "group " + g.id);
      append_unique(errata, paper_errata(fn, g.model));
      assessments.push_back({unique_id(g.id), g.model, fn, centroid.x, g.range,
                             g.grade_counts});
    }
  }
  if (assessments.empty()) throw DomainError("no data");

  ReportDocument doc;
  doc.scale = scale.bands();
  doc.calibration = "none";
  doc.errata = std::move(errata);
  const Ranking ranking = rank_groups(assessments);
  fill_group_entries(doc, assessments, ranking);
  doc.pairs = pair_notes(ranking);
  return doc;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output && cfg.output->string() != "-") {
    std::ofstream file(*cfg.output, std::ios::binary);
    if (!file) throw ParseError("cannot write " + cfg.output->string());
    file << text;
  } else {
    out << text;
  }
}

}  // namespace

GradeScale load_scale(const std::optional<std::filesystem::path>& path) {
  if (!path) return default_scale();
  try {
    return scale_from_bands(scale_from_json(ordered_json::parse(read_file(*path))));
  } catch (const ordered_json::exception& ex) {
    throw ParseError(std::string("malformed scale JSON: ") + ex.what());
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::string text;
    switch (config.command) {
      case Command::Calibrate: {
        const GradeScale scale = load_scale(config.scale_path);
        const auto records = ingest_all(config.inputs);
        const auto map = calibrate_grade_fns(records, scale, config.mode);
        text = grade_map_to_json(map, scale, config.mode).dump(2) + "\n";
        break;
      }
      case Command::AssessGroup: {
        text = run_assess_group(config).to_json();
        break;
      }
      case Command::AssessIndividual: {
        text = run_assess_individual(config).to_json();
        break;
      }
      case Command::Compare: {
        const ReportDocument doc = run_compare(config);
        if (config.format == "text") {
          std::ostringstream ss;
          doc.render_text(ss);
          text = ss.str();
        } else {
          text = doc.to_json();
        }
        break;
      }
    }
    emit(config, text, out);
    return kExitSuccess;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace fuzzgrade
