#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "fuzzgrade/assessment.hpp"

namespace fuzzgrade {

// Reads score records from UTF-8 CSV with header
// `group_id,student_id,rater_id,score,count`; rater_id and count are
// optional columns, a count of n expands the row into n records.
// Throws ParseError on malformed input, DomainError on out-of-range scores.
std::vector<ScoreRecord> ingest_scores(std::istream& in);
std::vector<ScoreRecord> ingest_scores(const std::filesystem::path& path);

}  // namespace fuzzgrade
