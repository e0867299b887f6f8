#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mars/core.hpp"
#include "mars/evaluation.hpp"
#include "mars/model.hpp"

namespace mars {

// Largest value set the paradigm search accepts. The candidate space is the
// ordered Bell number of m, which passes seven million at m = 9.
inline constexpr std::size_t kMaxSearchValues = 9;

// Streams every ordered set partition of the given values exactly once:
// stratum count k ascending from 1 to min(m, max_strata), and within each k
// in lexicographic order of the value-to-stratum assignment vector.
// Throws TooManyValuesForSearch when m > kMaxSearchValues. An empty value
// list yields an empty stream.
class StratificationEnumerator {
 public:
  explicit StratificationEnumerator(std::vector<ValueId> values,
                                    std::optional<int> max_strata = std::nullopt);

  std::optional<Stratification> next();

  // Index form of the current candidate, valid after a successful next():
  // assignment[i] is the 0-based stratum of values[i].
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t stratum_count() const { return k_; }

 private:
  bool advance();
  bool first_of_k();

  std::vector<ValueId> values_;
  std::size_t max_k_ = 0;
  std::size_t k_ = 0;
  bool fresh_k_ = true;
  std::vector<std::size_t> assignment_;
  std::vector<std::size_t> label_count_;
};

// Materializes the whole stream. Intended for small m (tests, CLI on desk
// scale); the enumerator above is the streaming form.
std::vector<Stratification> enumerate_stratifications(
    const std::vector<ValueId>& values, std::optional<int> max_strata = std::nullopt);

enum class SearchTarget {
  ExactSet,   // preferred set equals the given set
  Contains,   // the given action is in the preferred set
};

struct SearchQuery {
  Scenario base;  // its stratification field is ignored
  ModelKind model = ModelKind::Additive;
  SearchTarget target = SearchTarget::Contains;
  std::vector<ActionId> target_actions;  // ExactSet: the set; Contains: one action
  std::optional<int> max_strata;
};

struct SearchMatch {
  Stratification stratification;
  DecisionResult result;
};

struct SearchOutcome {
  std::vector<SearchMatch> matches;          // enumeration order
  std::size_t candidates_evaluated = 0;
  std::size_t skipped_non_singleton = 0;     // global-maximum only
};

// Inverse MARS: returns exactly the enumerated stratifications whose
// preferred set satisfies the target, in enumeration order. Global-maximum
// queries skip non-singleton candidates and report how many were skipped.
// Throws TargetActionUnknown, UnsatisfiableTarget (exact empty set), and
// TooManyValuesForSearch.
SearchOutcome search_paradigms(const SearchQuery& query);

}  // namespace mars
