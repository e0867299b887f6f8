#pragma once

// Test-only helpers: Hal fixtures and a deterministic random-scenario
// generator shared by the property suites and the acceptance criteria.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mars/core.hpp"
#include "mars/model.hpp"

namespace mars::testing {

// std::uniform_int_distribution is implementation-defined, so tests do
// their own bounded sampling to stay reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(raw() % n); }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance_percent(int percent) { return range(1, 100) <= percent; }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[below(pool.size())];
  }

 private:
  std::mt19937_64 engine_;
};

// Weight palette and scale factors are halves, small integers and powers
// of two: every stratum sum and every scaled sum is exact in binary
// floating point, which the invariance properties rely on.
inline const std::vector<double>& weight_palette() {
  static const std::vector<double> pool{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 8.0};
  return pool;
}

inline const std::vector<double>& scale_palette() {
  static const std::vector<double> pool{0.25, 0.5, 2.0, 3.0, 4.0, 8.0, 16.0};
  return pool;
}

inline Scenario hal_scenario(bool selfish) {
  Scenario s;
  s.name = selfish ? "Hal the Diabetic (selfish)" : "Hal the Diabetic";
  s.actions = {"take_insulin", "dont_take_insulin"};
  s.values = {"hals_life", "carlas_life", "property"};
  if (selfish) {
    s.stratification.strata = {{"hals_life"}, {"carlas_life"}, {"property"}};
    s.default_model = ModelKind::GlobalMaximum;
  } else {
    s.stratification.strata = {{"hals_life", "carlas_life"}, {"property"}};
    s.default_model = ModelKind::Additive;
  }
  s.impacts.set("take_insulin", "hals_life", 1);
  s.impacts.set("take_insulin", "carlas_life", -1);
  s.impacts.set("take_insulin", "property", -1);
  s.impacts.set("dont_take_insulin", "hals_life", -1);
  s.impacts.set("dont_take_insulin", "carlas_life", 1);
  s.impacts.set("dont_take_insulin", "property", 1);
  return s;
}

struct GenOptions {
  int max_actions = 5;
  int max_values = 6;
  int max_strata = 4;
  bool singleton_strata = false;  // k = m, one value per stratum
  bool with_weights = true;
  int zero_value_percent = 0;     // chance of a degenerate m = 0 scenario
};

inline Scenario random_scenario(Rng& rng, const GenOptions& opts = {}) {
  Scenario s;
  s.name = "random-" + std::to_string(rng.below(1000000));
  const int n = rng.range(1, opts.max_actions);
  for (int a = 0; a < n; ++a) s.actions.push_back("action_" + std::to_string(a + 1));

  int m = rng.range(1, opts.max_values);
  if (opts.zero_value_percent > 0 && rng.chance_percent(opts.zero_value_percent)) m = 0;
  for (int v = 0; v < m; ++v) s.values.push_back("value_" + std::to_string(v + 1));

  if (m > 0) {
    if (opts.singleton_strata) {
      // random permutation of the values, one stratum each
      std::vector<ValueId> order = s.values;
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
      }
      for (const ValueId& value : order) s.stratification.strata.push_back({value});
    } else {
      const int k = rng.range(1, std::min(m, opts.max_strata));
      // surjective assignment: seed each stratum with one value, then
      // scatter the rest
      std::vector<int> assignment(static_cast<std::size_t>(m));
      std::vector<int> slots(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) slots[static_cast<std::size_t>(i)] = i;
      for (std::size_t i = slots.size(); i > 1; --i) {
        std::swap(slots[i - 1], slots[rng.below(i)]);
      }
      for (int label = 0; label < k; ++label) {
        assignment[static_cast<std::size_t>(slots[static_cast<std::size_t>(label)])] = label;
      }
      for (int i = k; i < m; ++i) {
        assignment[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] =
            rng.range(0, k - 1);
      }
      s.stratification.strata.assign(static_cast<std::size_t>(k), {});
      for (int v = 0; v < m; ++v) {
        s.stratification.strata[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])]
            .push_back(s.values[static_cast<std::size_t>(v)]);
      }
    }
  }

  for (const ActionId& action : s.actions) {
    for (const ValueId& value : s.values) {
      int coefficient = rng.range(-1, 1);
      if (coefficient != 0) s.impacts.set(action, value, coefficient);
    }
  }

  if (opts.with_weights) {
    for (const ValueId& value : s.values) {
      if (rng.chance_percent(60)) s.weights.entries[value] = rng.pick(weight_palette());
    }
  }
  return s;
}

}  // namespace mars::testing
