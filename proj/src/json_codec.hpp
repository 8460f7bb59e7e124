#pragma once

#include <optional>

#include <json.hpp>

#include "scenariodoc/docgen_stats.hpp"
#include "scenariodoc/miner.hpp"

namespace scenariodoc::codec {

using nlohmann::json;

inline json rating_json(const std::optional<StarRating>& r) {
  if (!r) return nullptr;
  return json{{"value", r->value()}, {"positives", r->positives}, {"negatives", r->negatives}};
}

json full_scenario(const UsageScenario& s);
UsageScenario scenario_from(const json& j);

// Scenario as shown in documentation views.
json scenario_view(const UsageScenario& s);

}  // namespace scenariodoc::codec
