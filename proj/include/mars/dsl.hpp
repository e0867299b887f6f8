#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mars/core.hpp"

namespace mars {

// 1-based position of a token in the source text. Column and length count
// bytes within the line.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;

  bool operator==(const SourceSpan&) const = default;
};

enum class ParseErrorKind {
  Syntax,
  DuplicateId,
  UnknownReference,
  BadCoefficient,
  BadWeight,
  PartitionViolation,
};

std::string_view parse_error_kind_name(ParseErrorKind kind);

struct ParseError {
  SourceSpan span;
  ParseErrorKind kind = ParseErrorKind::Syntax;
  std::string message;
};

// Outcome of parse_scenario: either a scenario that passes
// validate_scenario, or every error found in one pass (no fail-fast).
struct ParseResult {
  std::optional<Scenario> scenario;
  std::vector<ParseError> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

// Parses the line-oriented scenario DSL (grammar documented in README.md).
ParseResult parse_scenario(std::string_view text);

// Canonical form: sections in fixed order, ids in declaration order, zero
// coefficients and unit weights omitted, weights in shortest round-trip
// decimal. parse(serialize(s)) equals s for every valid scenario.
std::string serialize_scenario(const Scenario& s);

}  // namespace mars
