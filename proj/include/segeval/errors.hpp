#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace segeval {

// Base type for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One broken sequence invariant, located by segment index.
struct ValidationIssue {
  enum class Kind { invalid_interval, order_violation };
  Kind kind;
  std::size_t index;        // offending segment
  std::size_t other_index;  // second segment of an order violation (else == index)
  std::string message;
};

// Thrown by validate_sequence; carries every violation found, not just the first.
struct ValidationError : Error {
  ValidationError(const std::string& what, std::vector<ValidationIssue> found)
      : Error(what), issues(std::move(found)) {}
  std::vector<ValidationIssue> issues;
};

// Requested span does not enclose all segments.
struct SpanError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::string file_name, std::size_t line_number, const std::string& what)
      : Error(file_name + ":" + std::to_string(line_number) + ": " + what),
        file(std::move(file_name)),
        line(line_number) {}
  std::string file;
  std::size_t line;
};

struct UnknownLabelError : Error {
  using Error::Error;
};

struct EmptyMatrixError : Error {
  using Error::Error;
};

// Back-trace found a cell not reproducible from any move; the matrix was
// not produced by compute_cost_matrix on these inputs.
struct InconsistentMatrixError : Error {
  using Error::Error;
};

// Input exceeds the brute-force enumeration bound.
struct TooLargeError : Error {
  using Error::Error;
};

// Requested perturbation counts cannot be placed on the given sequence.
struct InfeasibleSpecError : Error {
  using Error::Error;
};

}  // namespace segeval
