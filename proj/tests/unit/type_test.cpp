#include <gtest/gtest.h>

#include <random>
#include <set>

#include "scenario_gen.hpp"
#include "scenariodoc/docgen_type.hpp"
#include "scenariodoc/server.hpp"
#include "test_util.hpp"

using namespace scenariodoc;

namespace {

struct Mined {
  ApiDb db;
  std::vector<UsageScenario> all;
};

const Mined& fixture_corpus() {
  static const Mined m = [] {
    Mined out{load_api_db(testutil::fixture("fixture_apidb.json"), Config{}), {}};
    out.all = mine_scenarios(load_corpus(testutil::fixture("fixture_threads.jsonl"), CorpusFormat::kJsonLines), out.db);
    return out;
  }();
  return m;
}

}  // namespace

TEST(TypeBuckets, SingleScenarioGivesOneBucketPerType) {
  const auto& m = fixture_corpus();
  ScenarioRefs one;
  for (const auto& s : m.all) {
    if (s.id == "1002-0") one.push_back(&s);
  }
  ASSERT_EQ(one.size(), 1u);
  const auto buckets = build_type_buckets("Google Gson", one);
  ASSERT_EQ(buckets.size(), 2u);
  EXPECT_EQ(buckets[0].type_key, "com.google.gson.Gson");
  EXPECT_EQ(buckets[0].type_name, "Gson");
  EXPECT_EQ(buckets[1].type_key, "com.google.gson.reflect.TypeToken");
  for (const auto& b : buckets) {
    EXPECT_EQ(b.api, "Google Gson");
    EXPECT_EQ(b.scenarios, std::vector<std::size_t>{0});
  }
}

TEST(TypeBuckets, Empty) { EXPECT_TRUE(build_type_buckets("x", {}).empty()); }

TEST(TypeBuckets, LargestFirst) {
  const auto& m = fixture_corpus();
  const auto org = build_type_buckets("org.json", scenarios_of(m.all, "org.json"));
  ASSERT_EQ(org.size(), 3u);
  EXPECT_EQ(org[0].type_name, "JSONObject");
  EXPECT_EQ(org[0].scenarios.size(), 2u);
  EXPECT_EQ(org[1].type_key, "org.json.JSONArray");
  EXPECT_EQ(org[2].type_key, "org.json.JSONTokener");

  const auto refs = scenarios_of(m.all, "Jackson");
  const auto jackson = build_type_buckets("Jackson", refs);
  EXPECT_EQ(jackson[0].type_name, "ObjectMapper");
  EXPECT_EQ(jackson[0].scenarios.size(), 5u);
  // Newest scenario first inside a bucket.
  for (const auto& b : jackson) {
    for (std::size_t i = 1; i < b.scenarios.size(); ++i) {
      EXPECT_GE(refs[b.scenarios[i - 1]]->created_at, refs[b.scenarios[i]]->created_at);
    }
  }
}

TEST(TypeBuckets, MembershipAndCoverage) {
  std::mt19937 rng(8);
  for (int round = 0; round < 200; ++round) {
    const auto v = testutil::random_scenarios(rng, rng() % 40);
    ScenarioRefs refs;
    for (const auto& s : v) refs.push_back(&s);
    const auto buckets = build_type_buckets("api", refs);

    std::set<std::string> keys;
    std::set<std::size_t> covered;
    for (std::size_t i = 0; i < buckets.size(); ++i) {
      const auto& b = buckets[i];
      EXPECT_TRUE(keys.insert(b.type_key).second);
      if (i > 0) {
        EXPECT_GE(buckets[i - 1].scenarios.size(), b.scenarios.size());
      }
      std::size_t pos = 0, neg = 0;
      for (std::size_t s = 0; s < v.size(); ++s) {
        bool uses = false;
        for (const auto& t : v[s].api_types) uses = uses || type_key(v[s], t) == b.type_key;
        const bool listed = std::find(b.scenarios.begin(), b.scenarios.end(), s) != b.scenarios.end();
        EXPECT_EQ(uses, listed);
        if (uses) {
          pos += v[s].positives();
          neg += v[s].negatives();
        }
      }
      EXPECT_EQ(b.rating, star_rating(pos, neg));
      covered.insert(b.scenarios.begin(), b.scenarios.end());
    }
    // Every scenario has at least one API type, so every one is documented somewhere.
    EXPECT_EQ(covered.size(), v.size());
  }
}
