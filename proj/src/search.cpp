#include "mars/search.hpp"

#include <algorithm>
#include <string>

namespace mars {

namespace {

Stratification materialize(const std::vector<ValueId>& values,
                           const std::vector<std::size_t>& assignment, std::size_t k) {
  Stratification st;
  st.strata.assign(k, {});
  for (std::size_t i = 0; i < values.size(); ++i) {
    st.strata[assignment[i]].push_back(values[i]);
  }
  return st;
}

}  // namespace

StratificationEnumerator::StratificationEnumerator(std::vector<ValueId> values,
                                                   std::optional<int> max_strata)
    : values_(std::move(values)) {
  if (values_.size() > kMaxSearchValues) {
    throw MarsError(ErrorKind::TooManyValuesForSearch,
                    "stratification search supports at most " +
                        std::to_string(kMaxSearchValues) + " values; got " +
                        std::to_string(values_.size()));
  }
  if (max_strata && *max_strata < 1) {
    throw std::invalid_argument("max_strata must be >= 1");
  }
  max_k_ = values_.size();
  if (max_strata) max_k_ = std::min<std::size_t>(max_k_, static_cast<std::size_t>(*max_strata));
  k_ = values_.empty() ? 1 : 0;  // empty value set: exhausted from the start
}

// First surjection for the current k in lexicographic order: a prefix of
// zeros, then the remaining labels 1..k-1 forced one per position.
bool StratificationEnumerator::first_of_k() {
  const std::size_t m = values_.size();
  if (k_ > m) return false;
  assignment_.assign(m, 0);
  label_count_.assign(k_, 0);
  label_count_[0] = m > k_ ? m - (k_ - 1) : 1;
  for (std::size_t i = m - (k_ - 1), label = 1; i < m; ++i, ++label) {
    assignment_[i] = label;
    label_count_[label] = 1;
  }
  return true;
}

// Advances to the next surjection of the current k: find the rightmost
// position whose label can grow while a surjective completion still exists,
// then refill the suffix minimally.
bool StratificationEnumerator::advance() {
  const std::size_t m = values_.size();
  std::size_t missing = 0;  // labels unused in the prefix under inspection
  for (std::size_t label = 0; label < k_; ++label) {
    if (label_count_[label] == 0) ++missing;
  }
  for (std::size_t pos = m; pos-- > 0;) {
    std::size_t current = assignment_[pos];
    if (--label_count_[current] == 0) ++missing;
    const std::size_t rest = m - pos - 1;  // positions after pos
    for (std::size_t label = current + 1; label < k_; ++label) {
      std::size_t missing_after = missing - (label_count_[label] == 0 ? 1 : 0);
      if (missing_after > rest) continue;
      assignment_[pos] = label;
      ++label_count_[label];
      missing = missing_after;
      // Minimal suffix: zeros while slack remains, then the unused labels
      // in ascending order once every remaining position is needed.
      for (std::size_t i = pos + 1; i < m; ++i) {
        std::size_t remaining = m - i;
        std::size_t pick = 0;
        if (missing == remaining) {
          pick = 0;
          while (label_count_[pick] != 0) ++pick;
        }
        if (label_count_[pick] == 0) --missing;
        assignment_[i] = pick;
        ++label_count_[pick];
      }
      return true;
    }
  }
  return false;
}

std::optional<Stratification> StratificationEnumerator::next() {
  const std::size_t m = values_.size();
  if (m == 0) return std::nullopt;
  while (true) {
    if (k_ == 0 || fresh_k_) {
      ++k_;
      if (k_ > max_k_) return std::nullopt;
      fresh_k_ = false;
      if (!first_of_k()) return std::nullopt;
      return materialize(values_, assignment_, k_);
    }
    if (advance()) return materialize(values_, assignment_, k_);
    fresh_k_ = true;
  }
}

std::vector<Stratification> enumerate_stratifications(const std::vector<ValueId>& values,
                                                      std::optional<int> max_strata) {
  StratificationEnumerator enumerator(values, max_strata);
  std::vector<Stratification> out;
  while (auto st = enumerator.next()) out.push_back(std::move(*st));
  return out;
}

SearchOutcome search_paradigms(const SearchQuery& query) {
  const Scenario& base = query.base;

  std::vector<std::size_t> target_indices;
  for (const ActionId& action : query.target_actions) {
    auto it = std::find(base.actions.begin(), base.actions.end(), action);
    if (it == base.actions.end()) {
      throw MarsError(ErrorKind::TargetActionUnknown,
                      "target action '" + action + "' is not declared in the scenario");
    }
    std::size_t index = static_cast<std::size_t>(it - base.actions.begin());
    if (std::find(target_indices.begin(), target_indices.end(), index) ==
        target_indices.end()) {
      target_indices.push_back(index);
    }
  }
  if (query.target == SearchTarget::ExactSet && target_indices.empty()) {
    throw MarsError(ErrorKind::UnsatisfiableTarget,
                    "the preferred set is never empty; an empty exact target is unsatisfiable");
  }
  if (query.target == SearchTarget::Contains && target_indices.size() != 1) {
    throw std::invalid_argument("a containment target names exactly one action");
  }
  std::sort(target_indices.begin(), target_indices.end());

  auto matches_target = [&](const std::vector<std::size_t>& preferred) {
    if (query.target == SearchTarget::Contains) {
      return std::find(preferred.begin(), preferred.end(), target_indices[0]) !=
             preferred.end();
    }
    return preferred == target_indices;  // both are sorted by declaration index
  };

  SearchOutcome outcome;
  auto core = ScenarioEvaluator::Core::from_scenario(base);
  StratificationEnumerator enumerator(base.values, query.max_strata);

  std::vector<std::vector<std::size_t>> strata;
  while (auto st = enumerator.next()) {
    const auto& assignment = enumerator.assignment();
    const std::size_t k = enumerator.stratum_count();
    strata.assign(k, {});
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      strata[assignment[i]].push_back(i);
    }
    if (query.model == ModelKind::GlobalMaximum &&
        std::any_of(strata.begin(), strata.end(),
                    [](const auto& cell) { return cell.size() != 1; })) {
      ++outcome.skipped_non_singleton;
      continue;
    }
    ++outcome.candidates_evaluated;
    ScenarioEvaluator evaluator(core, strata, query.model);
    if (!matches_target(evaluator.preferred_indices())) continue;

    Scenario candidate = base;
    candidate.stratification = *st;
    outcome.matches.push_back({std::move(*st), preferred_set(candidate, query.model)});
  }
  return outcome;
}

}  // namespace mars
