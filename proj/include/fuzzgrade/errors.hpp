#pragma once

#include <stdexcept>
#include <string>

namespace fuzzgrade {

// Domain-level failure: degenerate fuzzy number, empty data, score out of range.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-level failure: malformed CSV, bad JSON, unreadable file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fuzzgrade
