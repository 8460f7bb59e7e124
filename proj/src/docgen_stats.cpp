#include "scenariodoc/docgen_stats.hpp"

#include <algorithm>
#include <set>

namespace scenariodoc {

std::optional<StarRating> star_rating(std::size_t positives, std::size_t negatives) {
  if (positives + negatives == 0) return std::nullopt;
  return StarRating{positives, negatives};
}

ScenarioRefs scenarios_of(const std::vector<UsageScenario>& all, std::string_view api) {
  ScenarioRefs out;
  for (const auto& s : all) {
    if (s.api == api) out.push_back(&s);
  }
  return out;
}

SentimentTotals sentiment_overview(const ScenarioRefs& scenarios) {
  SentimentTotals t;
  for (const auto* s : scenarios) {
    t.positive += s->positives();
    t.negative += s->negatives();
  }
  return t;
}

std::vector<MonthBin> sentiment_timeseries(const ScenarioRefs& scenarios) {
  if (scenarios.empty()) return {};
  std::map<MonthKey, MonthBin> bins;
  for (const auto* s : scenarios) {
    const auto m = month_of(s->created_at);
    auto& bin = bins[m];
    bin.month = m;
    bin.positive += s->positives();
    bin.negative += s->negatives();
  }
  std::vector<MonthBin> out;
  const MonthKey last = bins.rbegin()->first;
  for (MonthKey m = bins.begin()->first; m <= last; m = m.next()) {
    const auto it = bins.find(m);
    out.push_back(it == bins.end() ? MonthBin{m, 0, 0} : it->second);
  }
  return out;
}

std::map<std::string, std::size_t> co_used_apis(const ScenarioRefs& scenarios, std::string_view api) {
  std::map<std::string, std::size_t> out;
  for (const auto* s : scenarios) {
    const std::set<std::string> distinct(s->other_apis.begin(), s->other_apis.end());
    for (const auto& other : distinct) {
      if (other != api) ++out[other];
    }
  }
  return out;
}

std::string type_key(const UsageScenario& s, const std::string& simple) {
  const auto it = s.type_fqns.find(simple);
  return it == s.type_fqns.end() ? simple : it->second;
}

namespace {

std::set<std::string> type_keys(const UsageScenario& s) {
  std::set<std::string> keys;
  for (const auto& t : s.api_types) keys.insert(type_key(s, t));
  return keys;
}

}  // namespace

std::map<std::pair<std::string, std::string>, std::size_t> co_used_types(const ScenarioRefs& scenarios) {
  std::map<std::pair<std::string, std::string>, std::size_t> out;
  for (const auto* s : scenarios) {
    const auto keys = type_keys(*s);
    for (auto a = keys.begin(); a != keys.end(); ++a) {
      for (auto b = std::next(a); b != keys.end(); ++b) ++out[{*a, *b}];
    }
  }
  return out;
}

std::optional<StarRating> type_star_rating(const ScenarioRefs& scenarios, std::string_view type) {
  std::size_t p = 0;
  std::size_t n = 0;
  for (const auto* s : scenarios) {
    if (!type_keys(*s).contains(std::string(type))) continue;
    p += s->positives();
    n += s->negatives();
  }
  return star_rating(p, n);
}

StatisticalSummary build_statistical_summary(std::string_view api, const ScenarioRefs& scenarios) {
  StatisticalSummary sum;
  sum.api = std::string(api);
  sum.scenario_count = scenarios.size();
  sum.totals = sentiment_overview(scenarios);
  sum.rating = star_rating(sum.totals.positive, sum.totals.negative);
  sum.timeseries = sentiment_timeseries(scenarios);
  sum.co_used_apis = co_used_apis(scenarios, api);
  sum.co_used_types = co_used_types(scenarios);
  std::set<std::string> types;
  for (const auto* s : scenarios) {
    for (const auto& k : type_keys(*s)) types.insert(k);
  }
  for (const auto& t : types) sum.type_ratings[t] = type_star_rating(scenarios, t);
  return sum;
}

}  // namespace scenariodoc
