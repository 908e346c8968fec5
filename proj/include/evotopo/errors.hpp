#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evotopo {

// Base for every failure the library reports. The three subclasses map to
// the CLI exit codes 2 (parse), 3 (validation) and 4 (computation).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Location of the first problem found while reading an input file.
// line and phase are 1-based; 0 means "not applicable".
struct ParseReport {
  std::size_t line = 0;
  std::size_t phase = 0;
  std::string message;
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseReport report)
      : Error(format(report)), report_(std::move(report)) {}

  const ParseReport& report() const noexcept { return report_; }

 private:
  static std::string format(const ParseReport& r) {
    std::string out;
    if (r.line != 0) out += "line " + std::to_string(r.line) + ": ";
    if (r.phase != 0) out += "phase " + std::to_string(r.phase) + ": ";
    return out + r.message;
  }

  ParseReport report_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace evotopo
