#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pbp {

enum class ErrorKind {
  invalid_vertex,
  empty_graph,
  parse,
  invariant,
  parameter,
  out_of_hypothesis,
  unsupported_topology,
  budget,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. Domain errors carry a kind so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed `pgrid v1` input. Line and column are 1-based; column 0 means
/// the whole line.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Exact search exceeded its node budget. The bounds bracket the true value.
class BudgetError : public Error {
 public:
  BudgetError(int lower_bound, int upper_bound, std::uint64_t nodes);

  int lower_bound() const noexcept { return lower_; }
  int upper_bound() const noexcept { return upper_; }
  std::uint64_t nodes_explored() const noexcept { return nodes_; }

 private:
  int lower_;
  int upper_;
  std::uint64_t nodes_;
};

}  // namespace pbp
