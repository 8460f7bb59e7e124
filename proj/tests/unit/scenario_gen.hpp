#pragma once

// Random scenarios for the aggregation properties.

#include <random>
#include <string>
#include <vector>

#include "scenariodoc/miner.hpp"

namespace testutil {

inline scenariodoc::Opinion opinion(scenariodoc::Polarity p) {
  scenariodoc::Opinion o;
  o.polarity = p;
  o.score = p == scenariodoc::Polarity::kPositive ? 1.0 : -1.0;
  o.sentence.text = p == scenariodoc::Polarity::kPositive ? "good" : "bad";
  o.sentence.source = scenariodoc::SentenceSource::kComment;
  return o;
}

inline scenariodoc::UsageScenario make_scenario(const std::string& id, const std::string& api,
                                                std::vector<std::string> types, int year, unsigned month,
                                                int positives, int negatives) {
  using namespace scenariodoc;
  UsageScenario s;
  s.id = id;
  s.post_id = id;
  s.thread_id = id;
  s.api = api;
  s.api_types = std::move(types);
  for (const auto& t : s.api_types) s.snippet.types_used.insert(t);
  s.created_at = std::chrono::sys_days{std::chrono::year{year} / std::chrono::month{month} / 15};
  for (int i = 0; i < positives; ++i) s.reviews.push_back(opinion(Polarity::kPositive));
  for (int i = 0; i < negatives; ++i) s.reviews.push_back(opinion(Polarity::kNegative));
  return s;
}

inline std::vector<scenariodoc::UsageScenario> random_scenarios(std::mt19937& rng, std::size_t n) {
  static const std::vector<std::string> types = {"A", "B", "C", "D", "E"};
  static const std::vector<std::string> others = {"x.one", "x.two", "x.three"};
  std::vector<scenariodoc::UsageScenario> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> ts;
    for (const auto& t : types) {
      if (rng() % 3 == 0) ts.push_back(t);
    }
    if (ts.empty()) ts.push_back(types[rng() % types.size()]);
    auto s = make_scenario("s" + std::to_string(i), "api", ts, 2014 + static_cast<int>(rng() % 3),
                           1 + static_cast<unsigned>(rng() % 12), static_cast<int>(rng() % 4),
                           static_cast<int>(rng() % 3));
    for (const auto& o : others) {
      if (rng() % 2 == 0) s.other_apis.push_back(o);
    }
    if (rng() % 4 == 0) s.type_fqns[ts.front()] = "pkg." + ts.front();
    s.created_at += std::chrono::hours(static_cast<int>(rng() % 200));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace testutil
