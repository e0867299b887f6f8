#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mars/core.hpp"
#include "mars/explanation.hpp"
#include "mars/model.hpp"

namespace mars {

enum class ScoreDirection {
  HigherBetter,
  LowerBetter,
};

// Per-stratum scores of one action (top stratum first) plus the direction
// in which they are compared lexicographically.
struct EvaluationVector {
  std::vector<double> scores;
  ScoreDirection direction = ScoreDirection::HigherBetter;

  bool operator==(const EvaluationVector&) const = default;
};

struct DecisionResult {
  std::vector<ActionId> preferred;  // declaration order
  ExplanationTrace trace;
};

// Sum over the values of one stratum of weight * coefficient.
// stratum_index is 1-based. Throws UnknownAction / StratumIndexOutOfRange.
double stratum_aggregate(const Scenario& s, const ActionId& action,
                         int stratum_index, const Weights& weights);

// Per-stratum score vector for the four vector-based models:
//   additive            sum of coefficients            (higher better)
//   weighted-additive   sum of weight * coefficient    (higher better)
//   min-negative-count  count of -1 coefficients       (lower better)
//   min-demotion-sum    sum of max(0, -coefficient)    (lower better)
// Throws UnsupportedModel for global-maximum and stratum-satisfaction.
EvaluationVector evaluation_vector(const Scenario& s, ModelKind model,
                                   const ActionId& action);

// Strict preference between two actions under one model. FirstPreferred
// means `first` beats `second`; Tie when neither direction holds.
// Throws UnknownAction, and GmmRequiresTotalOrder when model is
// global-maximum and some stratum is not a singleton.
Preference compare(const Scenario& s, ModelKind model, const ActionId& first,
                   const ActionId& second);

// Actions no other action is strictly preferred to, plus the full trace.
DecisionResult preferred_set(const Scenario& s, ModelKind model);

// The stratum-satisfaction survivor set: walk strata top to bottom; when
// some candidate promotes a value of the current stratum, keep exactly the
// candidates that do; a stratum promoted by no candidate filters nothing.
std::vector<ActionId> satisfaction_filter(const Scenario& s);

// Dense, id-resolved evaluation machinery. preferred_set/compare and the
// paradigm search all route through this one implementation, so there is a
// single comparison code path.
class ScenarioEvaluator {
 public:
  // Id-resolved scenario data, independent of any stratification. Reused
  // across candidate stratifications by the paradigm search.
  struct Core {
    std::string scenario_name;
    std::vector<ActionId> actions;
    std::vector<ValueId> values;
    std::vector<int> coefficients;  // actions x values, row-major
    std::vector<double> weights;    // per value

    static Core from_scenario(const Scenario& s);

    int coefficient(std::size_t action, std::size_t value) const {
      return coefficients[action * values.size() + value];
    }
  };

  struct PairOutcome {
    Preference outcome = Preference::Tie;
    std::optional<int> deciding_stratum;
    std::optional<std::size_t> deciding_value;  // index into core.values
  };

  // strata holds value indices per stratum, top stratum first. Throws
  // GmmRequiresTotalOrder if model is global-maximum and a stratum has
  // more than one value. Keeps references to `core` and `strata`.
  ScenarioEvaluator(const Core& core, const std::vector<std::vector<std::size_t>>& strata,
                    ModelKind model);

  PairOutcome pair(std::size_t first, std::size_t second) const;
  std::vector<std::size_t> preferred_indices() const;

  // Per-action score vector; empty for stratum-satisfaction.
  const std::vector<double>& scores_of(std::size_t action) const;
  bool has_score_vectors() const;

  // Survivor sets per stratum (action indices); stratum-satisfaction only.
  const std::vector<std::vector<std::size_t>>& filter_survivors() const;

  const Core& core() const { return *core_; }
  ModelKind model() const { return model_; }

 private:
  const Core* core_;
  const std::vector<std::vector<std::size_t>>* strata_;
  ModelKind model_;
  std::vector<std::vector<double>> score_vectors_;       // per action
  std::vector<std::size_t> elimination_stage_;           // SS: 1-based, k+1 = survivor
  std::vector<std::vector<std::size_t>> filter_survivors_;
};

// Resolves a stratification's value ids to indices into `values`.
// Throws UnknownValue for ids not declared there.
std::vector<std::vector<std::size_t>> resolve_strata(const Stratification& st,
                                                     const std::vector<ValueId>& values);

}  // namespace mars
