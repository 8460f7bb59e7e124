#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "scenariodoc/apidb.hpp"
#include "test_util.hpp"

using namespace scenariodoc;
using testutil::fixture;

namespace {

const ApiDb& fixture_db() {
  static const ApiDb db = ApiDb::load(fixture("fixture_apidb.json"));
  return db;
}

}  // namespace

TEST(ApiDb, LoadsFixtureRecords) {
  const auto& db = fixture_db();
  ASSERT_EQ(db.size(), 5u);
  for (const char* name : {"Google Gson", "Jackson", "org.json", "java.util", "java.io"}) {
    EXPECT_NE(db.find(name), nullptr) << name;
  }
  EXPECT_EQ(db.find("google gson"), db.find("Google Gson"));
  EXPECT_EQ(db.find("nope"), nullptr);
}

TEST(ApiDb, EmptyDatabase) {
  const auto db = ApiDb::parse("[]");
  EXPECT_TRUE(db.empty());
  EXPECT_TRUE(db.resolve_fqn("Gson", {}).empty());
  EXPECT_EQ(db.api_for_import("com.google.gson.Gson"), nullptr);
}

TEST(ApiDb, DuplicateNameIsFatal) {
  EXPECT_THROW(ApiDb::parse(R"([{"name":"A","packages":["a"]},{"name":"a","packages":["b"]}])"), ApiDbError);
}

TEST(ApiDb, SchemaViolations) {
  EXPECT_THROW(ApiDb::parse("{}"), ApiDbError);
  EXPECT_THROW(ApiDb::parse("[{\"packages\":[]}]"), ApiDbError);
  EXPECT_THROW(ApiDb::parse("not json"), ApiDbError);
  // FQN outside every declared package.
  EXPECT_THROW(ApiDb::parse(R"([{"name":"A","packages":["a.b"],"types":{"X":"c.d.X"}}])"), ApiDbError);
  EXPECT_THROW(ApiDb::load("/nonexistent/apidb.json"), ApiDbError);
}

TEST(ApiDb, ExplicitImportScoresOne) {
  ResolveContext ctx;
  ctx.imports = {"com.google.gson.*"};
  const auto c = fixture_db().resolve_fqn("Gson", ctx);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].fqn, "com.google.gson.Gson");
  EXPECT_DOUBLE_EQ(c[0].score, 1.0);
  EXPECT_EQ(c[0].api->name, "Google Gson");

  ctx.imports = {"com.google.gson.Gson"};
  EXPECT_DOUBLE_EQ(fixture_db().resolve_fqn("Gson", ctx).at(0).score, 1.0);
}

TEST(ApiDb, BareNameResolvesToOwner) {
  const auto c = fixture_db().resolve_fqn("ObjectMapper", {});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].api->name, "Jackson");
  EXPECT_DOUBLE_EQ(c[0].score, 0.5);
}

TEST(ApiDb, LocalClassHasNoCandidates) {
  ResolveContext ctx;
  ctx.imports = {"com.fasterxml.jackson.databind.*"};
  EXPECT_TRUE(fixture_db().resolve_fqn("Registration", ctx).empty());
}

TEST(ApiDb, AmbiguousNameSplitsAndImportDisambiguates) {
  const auto bare = fixture_db().resolve_fqn("JsonParser", {});
  ASSERT_EQ(bare.size(), 2u);
  EXPECT_DOUBLE_EQ(bare[0].score, bare[1].score);
  EXPECT_LT(bare[0].score, 0.5);
  EXPECT_LT(bare[0].fqn, bare[1].fqn);

  ResolveContext ctx;
  ctx.imports = {"com.fasterxml.jackson.core.JsonParser"};
  const auto imported = fixture_db().resolve_fqn("JsonParser", ctx);
  ASSERT_FALSE(imported.empty());
  EXPECT_EQ(imported[0].fqn, "com.fasterxml.jackson.core.JsonParser");
  EXPECT_DOUBLE_EQ(imported[0].score, 1.0);
}

TEST(ApiDb, PackagePrefixBeatsBareName) {
  ResolveContext ctx;
  ctx.package_prefixes = {"com.google.gson"};
  const auto c = fixture_db().resolve_fqn("JsonParser", ctx);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].api->name, "Google Gson");
  EXPECT_GT(c[0].score, c[1].score);
  EXPECT_LE(c[0].score, 1.0);
}

TEST(ApiDb, WeightsAreConfigurable) {
  ResolveWeights w;
  w.bare_match = 0.25;
  EXPECT_DOUBLE_EQ(fixture_db().resolve_fqn("ObjectMapper", {}, w).at(0).score, 0.25);
}

TEST(ApiDb, ImportOwnerUsesLongestPackage) {
  auto db = ApiDb::parse(R"([{"name":"outer","packages":["a.b"]},{"name":"inner","packages":["a.b.c"]}])");
  EXPECT_EQ(db.api_for_import("a.b.c.X")->name, "inner");
  EXPECT_EQ(db.api_for_import("a.b.Y")->name, "outer");
  EXPECT_EQ(db.api_for_import("a.b.c.*")->name, "inner");
  EXPECT_EQ(db.api_for_import("a.bc.Z"), nullptr);
}

TEST(ApiDb, PackageOf) {
  EXPECT_EQ(package_of("a.b.C"), "a.b");
  EXPECT_EQ(package_of("C"), "");
}

TEST(ApiDb, BuiltinJdkCoversCommonPackages) {
  const auto jdk = ApiDb::builtin_jdk();
  for (const char* name : {"java.lang", "java.util", "java.io", "java.net", "javax.ws.rs"}) {
    EXPECT_NE(jdk.find(name), nullptr) << name;
  }
  EXPECT_EQ(jdk.resolve_fqn("String", {}).at(0).fqn, "java.lang.String");
}

TEST(ApiDb, MergeMissingKeepsExisting) {
  auto db = ApiDb::load(fixture("fixture_apidb.json"));
  const auto before = db.find("java.util")->types.size();
  db.merge_missing(ApiDb::builtin_jdk());
  EXPECT_EQ(db.find("java.util")->types.size(), before);
  EXPECT_NE(db.find("java.lang"), nullptr);
  const ApiRecord* gson = db.find("Google Gson");
  db.merge_missing(ApiDb::builtin_jdk());
  EXPECT_EQ(db.find("Google Gson"), gson);  // record addresses are stable
}

// No candidate FQN is ever absent from the db, and adding an unrelated
// record never reorders existing candidates.
TEST(ApiDb, ResolutionPropertiesOnRandomDatabases) {
  std::mt19937 rng(7);
  const std::vector<std::string> simple = {"A", "B", "C", "D", "E", "F"};
  for (int round = 0; round < 100; ++round) {
    ApiDb db;
    const int apis = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < apis; ++i) {
      ApiRecord r;
      r.name = "api" + std::to_string(i);
      r.packages = {"p" + std::to_string(i), "p" + std::to_string(i) + ".sub"};
      for (const auto& s : simple) {
        if (rng() % 2 == 0) r.types[s] = (rng() % 2 ? r.packages[0] : r.packages[1]) + "." + s;
      }
      db.add(std::move(r));
    }
    ResolveContext ctx;
    if (rng() % 2) ctx.imports.push_back("p" + std::to_string(rng() % apis) + ".*");
    if (rng() % 2) ctx.package_prefixes.push_back("p" + std::to_string(rng() % apis));

    std::map<std::string, std::vector<std::string>> before;
    for (const auto& s : simple) {
      for (const auto& c : db.resolve_fqn(s, ctx)) {
        ASSERT_TRUE(c.api->types.contains(s));
        EXPECT_EQ(c.api->types.at(s), c.fqn);
        EXPECT_GE(c.score, 0.0);
        EXPECT_LE(c.score, 1.0);
        before[s].push_back(c.fqn);
      }
    }
    ApiRecord unrelated;
    unrelated.name = "unrelated";
    unrelated.packages = {"zz"};
    unrelated.types["Q"] = "zz.Q";
    db.add(std::move(unrelated));
    for (const auto& s : simple) {
      std::vector<std::string> after;
      for (const auto& c : db.resolve_fqn(s, ctx)) after.push_back(c.fqn);
      EXPECT_EQ(after, before[s]);
    }
  }
}

TEST(ApiDb, RecordHelpers) {
  const auto* gson = fixture_db().find("Google Gson");
  ASSERT_NE(gson, nullptr);
  EXPECT_TRUE(gson->owns_fqn("com.google.gson.reflect.TypeToken"));
  EXPECT_FALSE(gson->owns_fqn("com.google.gsonx.Foo"));
  EXPECT_TRUE(gson->has_method("Gson", "fromJson"));
  EXPECT_FALSE(gson->has_method("Gson", "readValue"));
  EXPECT_EQ(gson->spellings().front(), "Google Gson");
}
