#include "fuzzgrade/csv.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace fuzzgrade {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

int find_column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::vector<ScoreRecord> ingest_scores(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("malformed CSV header");
  const auto header = split_row(line);
  const int col_group = find_column(header, "group_id");
  const int col_student = find_column(header, "student_id");
  const int col_rater = find_column(header, "rater_id");
  const int col_score = find_column(header, "score");
  const int col_count = find_column(header, "count");
  if (col_group < 0 || col_student < 0 || col_score < 0) {
    throw ParseError("malformed CSV header");
  }
  for (const auto& name : header) {
    if (name != "group_id" && name != "student_id" && name != "rater_id" &&
        name != "score" && name != "count") {
      throw ParseError("malformed CSV header");
    }
  }

  std::vector<ScoreRecord> records;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_row(line);
    auto field_at = [&](int col) -> std::string {
      return (col >= 0 && static_cast<std::size_t>(col) < fields.size()) ? fields[col] : "";
    };

    double score = 0.0;
    try {
      std::size_t pos = 0;
      const std::string raw = field_at(col_score);
      score = std::stod(raw, &pos);
      if (pos != raw.size()) throw std::invalid_argument(raw);
    } catch (const std::exception&) {
      throw ParseError("parse error at line " + std::to_string(line_no));
    }
    if (score < 0.0 || score > 100.0) {
      throw ParseError("score out of range at line " + std::to_string(line_no));
    }

    long count = 1;
    const std::string raw_count = field_at(col_count);
    if (!raw_count.empty()) {
      try {
        std::size_t pos = 0;
        count = std::stol(raw_count, &pos);
        if (pos != raw_count.size() || count < 1) throw std::invalid_argument(raw_count);
      } catch (const std::exception&) {
        throw ParseError("parse error at line " + std::to_string(line_no));
      }
    }

    const ScoreRecord rec{field_at(col_group), field_at(col_student), field_at(col_rater),
                          score};
    for (long i = 0; i < count; ++i) records.push_back(rec);
  }
  return records;
}

std::vector<ScoreRecord> ingest_scores(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return ingest_scores(in);
}

}  // namespace fuzzgrade
