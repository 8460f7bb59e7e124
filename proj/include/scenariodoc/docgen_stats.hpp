#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scenariodoc/miner.hpp"
#include "scenariodoc/time.hpp"

namespace scenariodoc {

// Counts are kept exact; value() is derived on demand.
struct StarRating {
  std::size_t positives = 0;
  std::size_t negatives = 0;

  double value() const {
    return 5.0 * static_cast<double>(positives) / static_cast<double>(positives + negatives);
  }
  friend bool operator==(const StarRating&, const StarRating&) = default;
};

// Absent when there are no opinions at all.
std::optional<StarRating> star_rating(std::size_t positives, std::size_t negatives);

struct SentimentTotals {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const SentimentTotals&, const SentimentTotals&) = default;
};

struct MonthBin {
  MonthKey month;
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const MonthBin&, const MonthBin&) = default;
};

using ScenarioRefs = std::vector<const UsageScenario*>;

// Scenarios linked to `api`, in input order.
ScenarioRefs scenarios_of(const std::vector<UsageScenario>& all, std::string_view api);

SentimentTotals sentiment_overview(const ScenarioRefs& scenarios);

// Contiguous months from the earliest to the latest scenario post, zero-filled.
// Each opinion is binned by its scenario's post month.
std::vector<MonthBin> sentiment_timeseries(const ScenarioRefs& scenarios);

// Other API -> number of the api's snippets that use it.
std::map<std::string, std::size_t> co_used_apis(const ScenarioRefs& scenarios, std::string_view api);

// Key identifying an API type of a scenario: its FQN when resolved, else the simple name.
std::string type_key(const UsageScenario& s, const std::string& simple);

// Unordered pairs (first < second) of the api's type keys used together in one snippet.
std::map<std::pair<std::string, std::string>, std::size_t> co_used_types(const ScenarioRefs& scenarios);

std::optional<StarRating> type_star_rating(const ScenarioRefs& scenarios, std::string_view type);

struct StatisticalSummary {
  std::string api;
  std::size_t scenario_count = 0;
  SentimentTotals totals;
  std::optional<StarRating> rating;
  std::vector<MonthBin> timeseries;
  std::map<std::string, std::size_t> co_used_apis;
  std::map<std::pair<std::string, std::string>, std::size_t> co_used_types;
  std::map<std::string, std::optional<StarRating>> type_ratings;

  friend bool operator==(const StatisticalSummary&, const StatisticalSummary&) = default;
};

StatisticalSummary build_statistical_summary(std::string_view api, const ScenarioRefs& scenarios);

}  // namespace scenariodoc
