#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scenariodoc/docgen_stats.hpp"

namespace scenariodoc {

struct TypeBucket {
  std::string api;
  std::string type_key;   // FQN when resolved, else the simple name
  std::string type_name;  // simple name
  std::vector<std::size_t> scenarios;  // scenario indices, newest first
  std::optional<StarRating> rating;

  friend bool operator==(const TypeBucket&, const TypeBucket&) = default;
};

// One bucket per API type used by at least one scenario, largest bucket
// first (ties by type key).
std::vector<TypeBucket> build_type_buckets(std::string_view api, const ScenarioRefs& scenarios);

}  // namespace scenariodoc
