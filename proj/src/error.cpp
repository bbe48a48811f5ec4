#include "pbp/error.hpp"

namespace pbp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_vertex: return "invalid-vertex";
    case ErrorKind::empty_graph: return "empty-graph";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invariant: return "invariant";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::out_of_hypothesis: return "out-of-hypothesis";
    case ErrorKind::unsupported_topology: return "unsupported-topology";
    case ErrorKind::budget: return "budget";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorKind::parse,
            "line " + std::to_string(line) + (column > 0 ? ", column " + std::to_string(column) : std::string{}) +
                ": " + message),
      line_(line),
      column_(column) {}

BudgetError::BudgetError(int lower_bound, int upper_bound, std::uint64_t nodes)
    : Error(ErrorKind::budget, "node budget exceeded after " + std::to_string(nodes) +
                                   " closure evaluations; value lies in [" + std::to_string(lower_bound) + ", " +
                                   std::to_string(upper_bound) + "]"),
      lower_(lower_bound),
      upper_(upper_bound),
      nodes_(nodes) {}

}  // namespace pbp
