#include "mars/evaluation.hpp"

#include <algorithm>
#include <unordered_map>

namespace mars {

namespace {

std::size_t index_of(const std::vector<std::string>& ids, const std::string& id,
                     ErrorKind kind, const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) {
    throw MarsError(kind, std::string("unknown ") + what + " '" + id + "'");
  }
  return static_cast<std::size_t>(it - ids.begin());
}

ScoreDirection direction_of(ModelKind model) {
  switch (model) {
    case ModelKind::MinNegativeCount:
    case ModelKind::MinDemotionSum:
      return ScoreDirection::LowerBetter;
    default:
      return ScoreDirection::HigherBetter;
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> resolve_strata(const Stratification& st,
                                                     const std::vector<ValueId>& values) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < values.size(); ++i) index.emplace(values[i], i);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(st.strata.size());
  for (const auto& cell : st.strata) {
    std::vector<std::size_t> resolved;
    resolved.reserve(cell.size());
    for (const ValueId& value : cell) {
      auto it = index.find(value);
      if (it == index.end()) {
        throw MarsError(ErrorKind::UnknownValue,
                        "stratification names undeclared value '" + value + "'");
      }
      resolved.push_back(it->second);
    }
    out.push_back(std::move(resolved));
  }
  return out;
}

ScenarioEvaluator::Core ScenarioEvaluator::Core::from_scenario(const Scenario& s) {
  Core core;
  core.scenario_name = s.name;
  core.actions = s.actions;
  core.values = s.values;
  core.coefficients.assign(s.actions.size() * s.values.size(), 0);
  for (std::size_t a = 0; a < s.actions.size(); ++a) {
    for (std::size_t v = 0; v < s.values.size(); ++v) {
      core.coefficients[a * s.values.size() + v] =
          s.impacts.coefficient(s.actions[a], s.values[v]);
    }
  }
  core.weights.reserve(s.values.size());
  for (const ValueId& value : s.values) core.weights.push_back(s.weights.of(value));
  return core;
}

ScenarioEvaluator::ScenarioEvaluator(const Core& core,
                                     const std::vector<std::vector<std::size_t>>& strata,
                                     ModelKind model)
    : core_(&core), strata_(&strata), model_(model) {
  const std::size_t n = core.actions.size();
  const std::size_t k = strata.size();

  if (model == ModelKind::GlobalMaximum) {
    for (std::size_t i = 0; i < k; ++i) {
      if (strata[i].size() != 1) {
        std::string members;
        for (std::size_t v : strata[i]) {
          if (!members.empty()) members += ", ";
          members += core.values[v];
        }
        throw MarsError(ErrorKind::GmmRequiresTotalOrder,
                        "global-maximum requires a total order over the values; stratum " +
                            std::to_string(i + 1) + " has " +
                            std::to_string(strata[i].size()) + " values (" + members + ")");
      }
    }
  }

  if (model == ModelKind::StratumSatisfaction) {
    // Elimination stage per action: the 1-based stratum at which the
    // filter dropped it, k+1 for survivors.
    elimination_stage_.assign(n, k + 1);
    std::vector<std::size_t> candidates(n);
    for (std::size_t a = 0; a < n; ++a) candidates[a] = a;
    filter_survivors_.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> promoters;
      for (std::size_t a : candidates) {
        bool promotes = std::any_of(strata[i].begin(), strata[i].end(), [&](std::size_t v) {
          return core.coefficient(a, v) == 1;
        });
        if (promotes) promoters.push_back(a);
      }
      if (!promoters.empty() && promoters.size() != candidates.size()) {
        for (std::size_t a : candidates) {
          if (std::find(promoters.begin(), promoters.end(), a) == promoters.end()) {
            elimination_stage_[a] = i + 1;
          }
        }
        candidates = promoters;
      }
      filter_survivors_.push_back(candidates);
    }
    return;
  }

  score_vectors_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<double>& scores = score_vectors_[a];
    scores.reserve(k);
    for (const auto& cell : strata) {
      double score = 0.0;
      switch (model) {
        case ModelKind::GlobalMaximum:
          score = core.coefficient(a, cell.front());
          break;
        case ModelKind::Additive: {
          int sum = 0;
          for (std::size_t v : cell) sum += core.coefficient(a, v);
          score = sum;
          break;
        }
        case ModelKind::WeightedAdditive: {
          double sum = 0.0;
          for (std::size_t v : cell) sum += core.weights[v] * core.coefficient(a, v);
          score = sum;
          break;
        }
        case ModelKind::MinNegativeCount: {
          int count = 0;
          for (std::size_t v : cell) count += core.coefficient(a, v) == -1 ? 1 : 0;
          score = count;
          break;
        }
        case ModelKind::MinDemotionSum: {
          // Coincides with min-negative-count while coefficients stay in
          // {-1, 0, 1}; kept separate because the contract is a sum.
          int sum = 0;
          for (std::size_t v : cell) sum += std::max(0, -core.coefficient(a, v));
          score = sum;
          break;
        }
        case ModelKind::StratumSatisfaction:
          break;
      }
      scores.push_back(score);
    }
  }
}

ScenarioEvaluator::PairOutcome ScenarioEvaluator::pair(std::size_t first,
                                                       std::size_t second) const {
  PairOutcome out;
  if (model_ == ModelKind::StratumSatisfaction) {
    std::size_t a = elimination_stage_[first];
    std::size_t b = elimination_stage_[second];
    if (a == b) return out;
    out.outcome = a > b ? Preference::FirstPreferred : Preference::SecondPreferred;
    out.deciding_stratum = static_cast<int>(std::min(a, b));
    return out;
  }

  const std::vector<double>& left = score_vectors_[first];
  const std::vector<double>& right = score_vectors_[second];
  const bool higher_better = direction_of(model_) == ScoreDirection::HigherBetter;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] == right[i]) continue;
    bool first_wins = higher_better ? left[i] > right[i] : left[i] < right[i];
    out.outcome = first_wins ? Preference::FirstPreferred : Preference::SecondPreferred;
    out.deciding_stratum = static_cast<int>(i + 1);
    if (model_ == ModelKind::GlobalMaximum) out.deciding_value = (*strata_)[i].front();
    return out;
  }
  return out;
}

std::vector<std::size_t> ScenarioEvaluator::preferred_indices() const {
  const std::size_t n = core_->actions.size();
  std::vector<std::size_t> preferred;
  for (std::size_t a = 0; a < n; ++a) {
    bool beaten = false;
    for (std::size_t rival = 0; rival < n && !beaten; ++rival) {
      if (rival == a) continue;
      beaten = pair(rival, a).outcome == Preference::FirstPreferred;
    }
    if (!beaten) preferred.push_back(a);
  }
  return preferred;
}

const std::vector<double>& ScenarioEvaluator::scores_of(std::size_t action) const {
  return score_vectors_[action];
}

bool ScenarioEvaluator::has_score_vectors() const { return !score_vectors_.empty(); }

const std::vector<std::vector<std::size_t>>& ScenarioEvaluator::filter_survivors() const {
  return filter_survivors_;
}

double stratum_aggregate(const Scenario& s, const ActionId& action, int stratum_index,
                         const Weights& weights) {
  index_of(s.actions, action, ErrorKind::UnknownAction, "action");
  if (stratum_index < 1 ||
      static_cast<std::size_t>(stratum_index) > s.stratification.stratum_count()) {
    throw MarsError(ErrorKind::StratumIndexOutOfRange,
                    "stratum index " + std::to_string(stratum_index) + " is out of range 1.." +
                        std::to_string(s.stratification.stratum_count()));
  }
  double sum = 0.0;
  for (const ValueId& value : s.stratification.strata[stratum_index - 1]) {
    sum += weights.of(value) * s.impacts.coefficient(action, value);
  }
  return sum;
}

EvaluationVector evaluation_vector(const Scenario& s, ModelKind model,
                                   const ActionId& action) {
  if (model == ModelKind::GlobalMaximum || model == ModelKind::StratumSatisfaction) {
    throw MarsError(ErrorKind::UnsupportedModel,
                    std::string(model_kind_name(model)) +
                        " does not define a per-stratum score vector");
  }
  std::size_t a = index_of(s.actions, action, ErrorKind::UnknownAction, "action");
  auto core = ScenarioEvaluator::Core::from_scenario(s);
  auto strata = resolve_strata(s.stratification, s.values);
  ScenarioEvaluator evaluator(core, strata, model);
  return {evaluator.scores_of(a), direction_of(model)};
}

Preference compare(const Scenario& s, ModelKind model, const ActionId& first,
                   const ActionId& second) {
  std::size_t a = index_of(s.actions, first, ErrorKind::UnknownAction, "action");
  std::size_t b = index_of(s.actions, second, ErrorKind::UnknownAction, "action");
  auto core = ScenarioEvaluator::Core::from_scenario(s);
  auto strata = resolve_strata(s.stratification, s.values);
  ScenarioEvaluator evaluator(core, strata, model);
  return evaluator.pair(a, b).outcome;
}

DecisionResult preferred_set(const Scenario& s, ModelKind model) {
  ExplanationTrace trace = build_trace(s, model);
  return {trace.preferred, std::move(trace)};
}

std::vector<ActionId> satisfaction_filter(const Scenario& s) {
  auto core = ScenarioEvaluator::Core::from_scenario(s);
  auto strata = resolve_strata(s.stratification, s.values);
  ScenarioEvaluator evaluator(core, strata, ModelKind::StratumSatisfaction);
  const auto& steps = evaluator.filter_survivors();
  std::vector<std::size_t> survivors;
  if (steps.empty()) {
    survivors.resize(s.actions.size());
    for (std::size_t a = 0; a < s.actions.size(); ++a) survivors[a] = a;
  } else {
    survivors = steps.back();
  }
  std::vector<ActionId> out;
  out.reserve(survivors.size());
  for (std::size_t a : survivors) out.push_back(s.actions[a]);
  return out;
}

}  // namespace mars
