#include "scenariodoc/docgen_type.hpp"

#include <algorithm>
#include <map>

namespace scenariodoc {

std::vector<TypeBucket> build_type_buckets(std::string_view api, const ScenarioRefs& scenarios) {
  std::map<std::string, TypeBucket> by_key;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const auto& s = *scenarios[i];
    for (const auto& simple : s.api_types) {
      const auto key = type_key(s, simple);
      auto& b = by_key[key];
      if (b.scenarios.empty()) {
        b.api = std::string(api);
        b.type_key = key;
        b.type_name = simple;
      }
      if (std::find(b.scenarios.begin(), b.scenarios.end(), i) == b.scenarios.end()) b.scenarios.push_back(i);
    }
  }
  std::vector<TypeBucket> out;
  for (auto& [key, b] : by_key) {
    std::stable_sort(b.scenarios.begin(), b.scenarios.end(), [&](std::size_t x, std::size_t y) {
      const auto& a = *scenarios[x];
      const auto& c = *scenarios[y];
      if (a.created_at != c.created_at) return a.created_at > c.created_at;
      return a.id < c.id;
    });
    b.rating = type_star_rating(scenarios, key);
    out.push_back(std::move(b));
  }
  std::stable_sort(out.begin(), out.end(), [](const TypeBucket& a, const TypeBucket& b) {
    return a.scenarios.size() > b.scenarios.size();
  });
  return out;
}

}  // namespace scenariodoc
