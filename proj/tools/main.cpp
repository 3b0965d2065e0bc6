#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzzgrade/report.hpp"

namespace {

void add_common(CLI::App* cmd, fuzzgrade::RunConfig& cfg) {
  cmd->add_flag("--oracle-check", cfg.oracle_check,
                "re-verify closed-form centroids against numeric integration");
}

void add_output(CLI::App* cmd, std::string& output) {
  cmd->add_option("-o,--output", output, "output path, '-' for stdout");
}

void add_scale(CLI::App* cmd, std::string& scale) {
  cmd->add_option("--scale", scale, "grade scale JSON (default: the built-in A-F scale)");
}

fuzzgrade::CalibrationMode parse_mode(const std::string& mode) {
  if (mode == "midpoint") return fuzzgrade::CalibrationMode::Midpoint;
  if (mode == "empirical") return fuzzgrade::CalibrationMode::Empirical;
  throw CLI::ValidationError("--mode must be midpoint or empirical");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy-number student assessment (calibrate, assess, compare)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fuzzgrade::kToolVersion);

  fuzzgrade::RunConfig cfg;
  std::string scores, scale, grades, output, mode = "midpoint";
  std::vector<std::string> inputs;

  auto* calibrate = app.add_subcommand("calibrate", "calibrate grade fuzzy numbers from scores");
  calibrate->add_option("--scores", scores, "score CSV")->required();
  calibrate->add_option("--mode", mode, "midpoint|empirical");
  add_scale(calibrate, scale);
  add_output(calibrate, output);
  add_common(calibrate, cfg);

  auto* assess_group = app.add_subcommand("assess-group", "aggregate and rank groups");
  assess_group->add_option("--scores", scores, "score CSV")->required();
  assess_group->add_option("--grades", grades, "calibrated grade-FN JSON");
  assess_group->add_option("--mode", mode, "midpoint|empirical");
  assess_group->add_flag("--paper-fixtures", cfg.paper_fixtures,
                         "use known printed aggregate tuples verbatim");
  add_scale(assess_group, scale);
  add_output(assess_group, output);
  add_common(assess_group, cfg);

  auto* assess_individual =
      app.add_subcommand("assess-individual", "per-student trapezoidal assessment and ranking");
  assess_individual->add_option("--scores", scores, "score CSV")->required();
  add_scale(assess_individual, scale);
  add_output(assess_individual, output);
  add_common(assess_individual, cfg);

  auto* compare = app.add_subcommand("compare", "rank groups from reports or score files");
  compare->add_option("inputs", inputs, "report JSON or score CSV files")->required();
  compare->add_option("--format", cfg.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  add_scale(compare, scale);
  add_output(compare, output);
  add_common(compare, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.mode = parse_mode(mode);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fuzzgrade::kExitParseError;
  }
  if (!scores.empty()) cfg.inputs.emplace_back(scores);
  for (const auto& path : inputs) cfg.inputs.emplace_back(path);
  if (!scale.empty()) cfg.scale_path = scale;
  if (!grades.empty()) cfg.grades_path = grades;
  if (!output.empty()) cfg.output = output;

  if (calibrate->parsed()) cfg.command = fuzzgrade::Command::Calibrate;
  if (assess_group->parsed()) cfg.command = fuzzgrade::Command::AssessGroup;
  if (assess_individual->parsed()) cfg.command = fuzzgrade::Command::AssessIndividual;
  if (compare->parsed()) cfg.command = fuzzgrade::Command::Compare;

  return fuzzgrade::run(cfg, std::cout, std::cerr);
}
