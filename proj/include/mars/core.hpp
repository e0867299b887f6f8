#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mars/model.hpp"

namespace mars {

using ActionId = std::string;
using ValueId = std::string;

// Identifier token: [A-Za-z_][A-Za-z0-9_]*, nonempty, case-sensitive.
bool is_valid_identifier(std::string_view id);

// Ordered partition of the value set. strata[0] is the most important
// ("top") stratum; stratum indices in the public API are 1-based.
struct Stratification {
  std::vector<std::vector<ValueId>> strata;

  std::size_t stratum_count() const { return strata.size(); }

  bool operator==(const Stratification&) const = default;
};

// Total map from (action, value) to a coefficient in {-1, 0, +1}.
// Pairs without an entry have coefficient 0.
struct ImpactMatrix {
  std::map<std::pair<ActionId, ValueId>, int> entries;

  int coefficient(const ActionId& action, const ValueId& value) const;
  void set(const ActionId& action, const ValueId& value, int coefficient);
};

// Per-value weights; values without an entry weigh 1.0.
// Weights must be strictly positive and finite.
struct Weights {
  std::map<ValueId, double> entries;

  double of(const ValueId& value) const;
};

struct Scenario {
  std::string name;
  std::vector<ActionId> actions;
  std::vector<ValueId> values;
  Stratification stratification;
  ImpactMatrix impacts;
  Weights weights;
  ModelKind default_model = ModelKind::Additive;
};

// Semantic equality: impact matrices compare over the full action x value
// grid (an explicit 0 equals an omitted entry) and weights compare by
// effective value on the declared values (an explicit 1.0 equals a default).
// Everything else compares structurally.
bool operator==(const Scenario& a, const Scenario& b);
inline bool operator!=(const Scenario& a, const Scenario& b) { return !(a == b); }

// Result of value_order_compare: the qualitative order between two values.
// Values in the same stratum (including a value against itself) are
// Incomparable.
enum class ValueOrder {
  MoreImportant,
  LessImportant,
  Incomparable,
};

enum class ErrorKind {
  UnknownAction,
  UnknownValue,
  StratumIndexOutOfRange,
  UnsupportedModel,
  GmmRequiresTotalOrder,
  TargetActionUnknown,
  UnsatisfiableTarget,
  TooManyValuesForSearch,
  MalformedTrace,
};

class MarsError : public std::runtime_error {
 public:
  MarsError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class ViolationKind {
  BadIdentifier,
  BadScenarioName,
  EmptyActions,
  DuplicateActionId,
  DuplicateValueId,
  EmptyStratum,
  UnknownValueInStratum,
  ValueInMultipleStrata,
  ValueNotInAnyStratum,
  UnknownActionInImpact,
  UnknownValueInImpact,
  CoefficientOutOfRange,
  UnknownValueInWeight,
  NonPositiveWeight,
};

struct Violation {
  ViolationKind kind;
  std::string subject;  // the offending identifier (or name/text)
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

// Checks every scenario invariant and reports all findings at once.
// An empty violation list means the scenario is valid. A scenario with no
// values is valid but degenerate (all actions tie); it yields a warning.
ValidationReport validate_scenario(const Scenario& s);

// The tuple of coefficients of one action over all values, in value
// declaration order. Throws UnknownAction.
std::vector<int> impact_representation(const Scenario& s, const ActionId& action);

// Qualitative order of two values under a stratification: MoreImportant
// when `first` sits in a strictly higher (lower-index) stratum.
// Throws UnknownValue when either value is absent.
ValueOrder value_order_compare(const Stratification& st, const ValueId& first,
                               const ValueId& second);

// 1-based index of the stratum containing `value`. Throws UnknownValue.
int stratum_of(const Stratification& st, const ValueId& value);

}  // namespace mars
