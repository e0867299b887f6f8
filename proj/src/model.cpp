#include "mars/model.hpp"

namespace mars {

std::string_view model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::GlobalMaximum: return "global-maximum";
    case ModelKind::Additive: return "additive";
    case ModelKind::WeightedAdditive: return "weighted-additive";
    case ModelKind::MinNegativeCount: return "min-negative-count";
    case ModelKind::MinDemotionSum: return "min-demotion-sum";
    case ModelKind::StratumSatisfaction: return "stratum-satisfaction";
  }
  return "additive";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) {
  for (ModelKind kind : kAllModels) {
    if (model_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view model_kind_summary(ModelKind kind) {
  switch (kind) {
    case ModelKind::GlobalMaximum:
      return "compare coefficients stratum by stratum from the top; requires singleton strata";
    case ModelKind::Additive:
      return "compare per-stratum sums of impact coefficients, top stratum first";
    case ModelKind::WeightedAdditive:
      return "additive with per-value weights applied inside each stratum";
    case ModelKind::MinNegativeCount:
      return "prefer fewer demoted values per stratum, top stratum first";
    case ModelKind::MinDemotionSum:
      return "prefer smaller per-stratum demotion totals, top stratum first";
    case ModelKind::StratumSatisfaction:
      return "keep the actions promoting each stratum, top to bottom; survivors are preferred";
  }
  return "";
}

std::string_view preference_name(Preference p) {
  switch (p) {
    case Preference::FirstPreferred: return "first-preferred";
    case Preference::SecondPreferred: return "second-preferred";
    case Preference::Tie: return "tie";
  }
  return "tie";
}

std::optional<Preference> parse_preference(std::string_view name) {
  if (name == "first-preferred") return Preference::FirstPreferred;
  if (name == "second-preferred") return Preference::SecondPreferred;
  if (name == "tie") return Preference::Tie;
  return std::nullopt;
}

}  // namespace mars
