#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xjoin {

/// Malformed input text. `line()` is 1-based for line-oriented formats and 0
/// when the format has no lines (graph6).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive routine was asked to handle more vertices than it allows.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(const std::string& what, std::size_t actual, std::size_t limit)
      : std::runtime_error(what + " (size " + std::to_string(actual) +
                           ", limit " + std::to_string(limit) + ")"),
        actual_(actual),
        limit_(limit) {}

  std::size_t actual() const noexcept { return actual_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t actual_;
  std::size_t limit_;
};

/// A join (base graph + fiber spec) that is not reduced where a reduced one
/// is required.
class NotReducedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant that should hold by construction was violated.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace xjoin
