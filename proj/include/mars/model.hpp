#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace mars {

// The six evaluation models. Each turns an impact matrix plus a stratified
// paradigm into a strict preference relation over actions.
enum class ModelKind {
  GlobalMaximum,
  Additive,
  WeightedAdditive,
  MinNegativeCount,
  MinDemotionSum,
  StratumSatisfaction,
};

inline constexpr std::array<ModelKind, 6> kAllModels{
    ModelKind::GlobalMaximum,      ModelKind::Additive,
    ModelKind::WeightedAdditive,   ModelKind::MinNegativeCount,
    ModelKind::MinDemotionSum,     ModelKind::StratumSatisfaction,
};

// Canonical kebab-case names, used by the CLI and the scenario DSL.
std::string_view model_kind_name(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view name);

// One-line semantics, used by `mars models`.
std::string_view model_kind_summary(ModelKind kind);

// Outcome of one pairwise comparison. compare(a, b) == FirstPreferred
// exactly when compare(b, a) == SecondPreferred.
enum class Preference {
  FirstPreferred,
  SecondPreferred,
  Tie,
};

std::string_view preference_name(Preference p);
std::optional<Preference> parse_preference(std::string_view name);

}  // namespace mars
