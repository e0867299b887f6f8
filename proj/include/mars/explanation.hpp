#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mars/core.hpp"
#include "mars/model.hpp"

namespace mars {

// One pairwise comparison, with enough detail to replay the decision.
// deciding_stratum is present exactly when the outcome is not a tie; the
// score sequences (per stratum, top first) are present for the four
// vector-based models and for global-maximum, absent for
// stratum-satisfaction.
struct ComparisonRecord {
  ActionId first;
  ActionId second;
  Preference outcome = Preference::Tie;
  std::optional<int> deciding_stratum;             // 1-based
  std::optional<ValueId> deciding_value;           // global-maximum only
  std::optional<std::vector<double>> left_scores;  // scores of `first`
  std::optional<std::vector<double>> right_scores; // scores of `second`

  bool operator==(const ComparisonRecord&) const = default;
};

// Survivor set after one stratum of the satisfaction filter.
struct FilterStep {
  int stratum_index = 0;  // 1-based
  std::vector<ActionId> survivors;

  bool operator==(const FilterStep&) const = default;
};

struct ExplanationTrace {
  std::string scenario_name;
  ModelKind model = ModelKind::Additive;
  // Every unordered action pair exactly once, in declaration order.
  std::vector<ComparisonRecord> records;
  // Per-stratum survivor sets; populated for stratum-satisfaction only.
  std::vector<FilterStep> filter_steps;
  std::vector<ActionId> preferred;

  bool operator==(const ExplanationTrace&) const = default;
};

enum class TraceFormat {
  Plain,
  Structured,
};

// Builds the full reasoning trace for a valid scenario under one model.
// Deterministic; consistent with preferred_set. Throws the same errors as
// the evaluation operations.
ExplanationTrace build_trace(const Scenario& s, ModelKind model);

// Plain: human-readable narrative, one line per comparison naming the
// deciding stratum (and value, for global-maximum).
// Structured: the mars-trace/1 line-delimited key-value schema; parseable
// back with parse_trace.
std::string render_trace(const ExplanationTrace& trace, TraceFormat format);

// Inverse of render_trace(..., Structured). Throws MalformedTrace.
ExplanationTrace parse_trace(const std::string& text);

}  // namespace mars
