#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dhg {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An algorithm was asked to run on a graph that does not meet its
/// requirements (e.g. sampling from an empty line graph).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two hyperarcs share no node, so they do not form an instance of any class.
class NotIncidentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dhg
