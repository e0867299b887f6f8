#include "mars/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mars {

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  if (!head(id.front())) return false;
  return std::all_of(id.begin() + 1, id.end(), tail);
}

int ImpactMatrix::coefficient(const ActionId& action, const ValueId& value) const {
  auto it = entries.find({action, value});
  return it == entries.end() ? 0 : it->second;
}

void ImpactMatrix::set(const ActionId& action, const ValueId& value, int coefficient) {
  entries[{action, value}] = coefficient;
}

double Weights::of(const ValueId& value) const {
  auto it = entries.find(value);
  return it == entries.end() ? 1.0 : it->second;
}

bool operator==(const Scenario& a, const Scenario& b) {
  if (a.name != b.name || a.actions != b.actions || a.values != b.values ||
      a.stratification != b.stratification || a.default_model != b.default_model) {
    return false;
  }
  for (const ActionId& action : a.actions) {
    for (const ValueId& value : a.values) {
      if (a.impacts.coefficient(action, value) != b.impacts.coefficient(action, value)) {
        return false;
      }
    }
  }
  for (const ValueId& value : a.values) {
    if (a.weights.of(value) != b.weights.of(value)) return false;
  }
  return true;
}

namespace {

void add(ValidationReport& report, ViolationKind kind, const std::string& subject,
         std::string message) {
  report.violations.push_back({kind, subject, std::move(message)});
}

}  // namespace

ValidationReport validate_scenario(const Scenario& s) {
  ValidationReport report;

  if (s.name.find('\n') != std::string::npos || s.name.find('\r') != std::string::npos) {
    add(report, ViolationKind::BadScenarioName, s.name,
        "scenario name must not contain line breaks");
  }

  if (s.actions.empty()) {
    add(report, ViolationKind::EmptyActions, "", "scenario declares no actions");
  }
  std::unordered_set<std::string> seen_actions;
  for (const ActionId& action : s.actions) {
    if (!is_valid_identifier(action)) {
      add(report, ViolationKind::BadIdentifier, action,
          "invalid action identifier '" + action + "'");
    }
    if (!seen_actions.insert(action).second) {
      add(report, ViolationKind::DuplicateActionId, action,
          "action '" + action + "' declared more than once");
    }
  }

  std::unordered_set<std::string> seen_values;
  for (const ValueId& value : s.values) {
    if (!is_valid_identifier(value)) {
      add(report, ViolationKind::BadIdentifier, value,
          "invalid value identifier '" + value + "'");
    }
    if (!seen_values.insert(value).second) {
      add(report, ViolationKind::DuplicateValueId, value,
          "value '" + value + "' declared more than once");
    }
  }

  std::unordered_map<std::string, int> stratum_uses;
  for (std::size_t i = 0; i < s.stratification.strata.size(); ++i) {
    const auto& cell = s.stratification.strata[i];
    const std::string index = std::to_string(i + 1);
    if (cell.empty()) {
      add(report, ViolationKind::EmptyStratum, index, "stratum " + index + " is empty");
    }
    for (const ValueId& value : cell) {
      if (!seen_values.count(value)) {
        add(report, ViolationKind::UnknownValueInStratum, value,
            "stratum " + index + " names undeclared value '" + value + "'");
      }
      ++stratum_uses[value];
    }
  }
  for (const ValueId& value : s.values) {
    auto it = stratum_uses.find(value);
    int uses = it == stratum_uses.end() ? 0 : it->second;
    if (uses == 0) {
      add(report, ViolationKind::ValueNotInAnyStratum, value,
          "value '" + value + "' is not assigned to any stratum");
    } else if (uses > 1) {
      add(report, ViolationKind::ValueInMultipleStrata, value,
          "value '" + value + "' is assigned to more than one stratum");
    }
  }

  for (const auto& [key, coefficient] : s.impacts.entries) {
    const auto& [action, value] = key;
    if (!seen_actions.count(action)) {
      add(report, ViolationKind::UnknownActionInImpact, action,
          "impact entry names undeclared action '" + action + "'");
    }
    if (!seen_values.count(value)) {
      add(report, ViolationKind::UnknownValueInImpact, value,
          "impact entry names undeclared value '" + value + "'");
    }
    if (coefficient < -1 || coefficient > 1) {
      add(report, ViolationKind::CoefficientOutOfRange, action + "/" + value,
          "impact of '" + action + "' on '" + value + "' is " +
              std::to_string(coefficient) + "; coefficients are -1, 0 or +1");
    }
  }

  for (const auto& [value, weight] : s.weights.entries) {
    if (!seen_values.count(value)) {
      add(report, ViolationKind::UnknownValueInWeight, value,
          "weight entry names undeclared value '" + value + "'");
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      std::ostringstream os;
      os << "weight of '" << value << "' is " << weight << "; weights must be > 0";
      add(report, ViolationKind::NonPositiveWeight, value, os.str());
    }
  }

  if (s.values.empty() && report.ok()) {
    report.warnings.push_back(
        "scenario declares no values; every action ties and all are preferred");
  }
  return report;
}

std::vector<int> impact_representation(const Scenario& s, const ActionId& action) {
  if (std::find(s.actions.begin(), s.actions.end(), action) == s.actions.end()) {
    throw MarsError(ErrorKind::UnknownAction, "unknown action '" + action + "'");
  }
  std::vector<int> row;
  row.reserve(s.values.size());
  for (const ValueId& value : s.values) {
    row.push_back(s.impacts.coefficient(action, value));
  }
  return row;
}

ValueOrder value_order_compare(const Stratification& st, const ValueId& first,
                               const ValueId& second) {
  int a = stratum_of(st, first);
  int b = stratum_of(st, second);
  if (a < b) return ValueOrder::MoreImportant;
  if (a > b) return ValueOrder::LessImportant;
  return ValueOrder::Incomparable;
}

int stratum_of(const Stratification& st, const ValueId& value) {
  for (std::size_t i = 0; i < st.strata.size(); ++i) {
    const auto& cell = st.strata[i];
    if (std::find(cell.begin(), cell.end(), value) != cell.end()) {
      return static_cast<int>(i + 1);
    }
  }
  throw MarsError(ErrorKind::UnknownValue,
                  "value '" + value + "' does not occur in the stratification");
}

}  // namespace mars
