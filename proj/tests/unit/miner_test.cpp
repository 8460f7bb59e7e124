#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "scenariodoc/miner.hpp"
#include "scenariodoc/serialize.hpp"
#include "scenariodoc/server.hpp"
#include "test_util.hpp"

using namespace scenariodoc;
using testutil::fixture;
using testutil::fixture_json;

namespace {

const ApiDb& db() {
  static const ApiDb d = load_api_db(fixture("fixture_apidb.json"), Config{});
  return d;
}

const Corpus& corpus() {
  static const Corpus c = load_corpus(fixture("fixture_threads.jsonl"), CorpusFormat::kJsonLines);
  return c;
}

const std::vector<UsageScenario>& mined() {
  static const std::vector<UsageScenario> s = mine_scenarios(corpus(), db());
  return s;
}

const UsageScenario& scenario(const std::string& id) {
  const auto& all = mined();
  const auto it = std::find_if(all.begin(), all.end(), [&](const UsageScenario& s) { return s.id == id; });
  if (it == all.end()) throw std::runtime_error("no scenario " + id);
  return *it;
}

CodeSnippet parse(const std::string& code) {
  RawSnippet raw;
  raw.post_id = "p";
  raw.text = code;
  return parse_java_elements(raw);
}

std::vector<Sentence> sentences(const std::vector<std::string>& texts, int block) {
  std::vector<Sentence> out;
  for (const auto& t : texts) {
    Sentence s;
    s.text = t;
    s.block = block;
    s.position = static_cast<int>(out.size());
    out.push_back(s);
  }
  return out;
}

bool contains_text(const std::vector<Sentence>& v, std::string_view needle) {
  return std::any_of(v.begin(), v.end(), [&](const Sentence& s) { return s.text.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Link, GsonListAnswerGoesToGson) {
  const auto& s = scenario("1002-0");
  EXPECT_EQ(s.api, "Google Gson");
  PostContext ctx;
  ctx.answer_text = "Google Gson supports generics and nested beans. You can try org.json.";
  ctx.question_text = "I have looked at Jackson and Gson.";
  const auto link = link_snippet_to_api(s.snippet, ctx, db());
  ASSERT_TRUE(link);
  EXPECT_EQ(link->api->name, "Google Gson");
  EXPECT_GT(link->score, 0.2);
  EXPECT_DOUBLE_EQ(link->score, 0.7 * link->type_fraction + 0.3 * link->mention);
}

TEST(Link, LocalOnlySnippetHasNoApi) {
  const auto s = parse("class Registration {\n  int id;\n}\nRegistration r = new Registration();");
  EXPECT_FALSE(link_snippet_to_api(s, {}, db()));
}

TEST(Link, FloorIsConfigurable) {
  const auto s = parse("List<String> xs = new ArrayList<>();\nxs.add(\"a\");");
  Config c;
  ASSERT_TRUE(link_snippet_to_api(s, {}, db(), c));
  c.link.floor = 0.95;
  EXPECT_FALSE(link_snippet_to_api(s, {}, db(), c));
}

TEST(Link, HandAssignedCases) {
  const auto cases = fixture_json("link_cases.json");
  ASSERT_EQ(cases.size(), 20u);
  int agree = 0;
  std::string misses;
  for (const auto& c : cases) {
    PostContext ctx;
    ctx.answer_text = c["text"].get<std::string>();
    const auto link = link_snippet_to_api(parse(c["code"].get<std::string>()), ctx, db());
    const std::string got = link ? link->api->name : "";
    const std::string want = c["api"].is_null() ? "" : c["api"].get<std::string>();
    if (got == want) ++agree;
    else misses += "\n  got '" + got + "' want '" + want + "': " + c["code"].get<std::string>();
  }
  EXPECT_GE(agree, 16) << misses;
}

TEST(ResolveTypes, ImportsAndInlineNames) {
  const auto s = parse("import com.fasterxml.jackson.core.JsonParser;\n\nJsonParser p = f.createParser(in);\n"
                       "com.google.gson.JsonObject o = null;");
  const auto ctx = resolve_context_for(s);
  EXPECT_NE(std::find(ctx.imports.begin(), ctx.imports.end(), "com.google.gson.JsonObject"), ctx.imports.end());
  for (const auto& r : resolve_types(s, db())) {
    if (r.simple == "JsonParser") {
      ASSERT_EQ(r.top.size(), 1u);
      EXPECT_EQ(r.top[0].api->name, "Jackson");
    }
    if (r.simple == "JsonObject") {
      EXPECT_EQ(r.top.at(0).api->name, "Google Gson");
    }
  }
}

TEST(Description, GsonListAnswerSelection) {
  const auto& s = scenario("1002-0");
  EXPECT_FALSE(s.description_fallback);
  EXPECT_TRUE(contains_text(s.description, "supports generics and nested beans"));
  EXPECT_FALSE(contains_text(s.description, "you can try org.json"));
  for (const auto& d : s.description) EXPECT_TRUE(refers_to_api(d.text, *db().find("Google Gson"))) << d.text;
}

TEST(Description, SingleSentence) {
  const auto d = generate_description(sentences({"Gson makes this easy."}, 0), *db().find("Google Gson"), 1);
  ASSERT_EQ(d.sentences.size(), 1u);
  EXPECT_FALSE(d.fallback);
}

TEST(Description, FallbackToPrecedingSentence) {
  auto all = sentences({"Try this first.", "It should work."}, 0);
  auto after = sentences({"Good luck with it."}, 2);
  all.insert(all.end(), after.begin(), after.end());
  const auto d = generate_description(all, *db().find("Jackson"), 1);
  ASSERT_EQ(d.sentences.size(), 1u);
  EXPECT_TRUE(d.fallback);
  EXPECT_EQ(d.sentences[0].text, "It should work.");
  EXPECT_TRUE(generate_description({}, *db().find("Jackson"), 0).sentences.empty());
}

TEST(Description, BoundedAndInDocumentOrder) {
  std::vector<std::string> texts;
  for (int i = 0; i < 8; ++i) texts.push_back("Jackson sentence number " + std::to_string(i) + " about mapping.");
  const auto d = generate_description(sentences(texts, 0), *db().find("Jackson"), 1);
  EXPECT_LE(d.sentences.size(), 3u);
  for (std::size_t i = 1; i < d.sentences.size(); ++i) EXPECT_LT(d.sentences[i - 1].position, d.sentences[i].position);
}

TEST(Description, HandBuiltSummaries) {
  std::size_t expected = 0, matched = 0;
  for (const auto& c : fixture_json("summaries.json")) {
    auto all = sentences(c["before"].get<std::vector<std::string>>(), 0);
    auto after = sentences(c["after"].get<std::vector<std::string>>(), 2);
    for (auto& s : after) s.position += static_cast<int>(all.size());
    all.insert(all.end(), after.begin(), after.end());
    const auto d = generate_description(all, *db().find(c["api"].get<std::string>()), 1);
    const auto want = c["expected"].get<std::vector<std::string>>();
    expected += want.size();
    for (const auto& w : want) matched += contains_text(d.sentences, w) ? 1 : 0;
  }
  EXPECT_GE(static_cast<double>(matched) / static_cast<double>(expected), 0.7) << matched << "/" << expected;
}

TEST(TextRank, Basics) {
  EXPECT_TRUE(textrank({}).empty());
  const auto one = textrank({"alone here"});
  ASSERT_EQ(one.size(), 1u);
  const auto r = textrank({"jackson maps json", "jackson maps xml", "weather today sunny"});
  EXPECT_GT(r[0], r[2]);
  EXPECT_DOUBLE_EQ(r[0], r[1]);
}

TEST(BeamSelect, PrefersCentralNonRedundant) {
  const std::vector<std::string> s = {"a b c", "a b c", "x y z"};
  DescriptionOptions two;
  two.max_sentences = 2;
  const auto picked = beam_select(s, {1.0, 1.0, 0.9}, {0, 1, 2}, two);
  EXPECT_TRUE(std::is_sorted(picked.begin(), picked.end()));
  EXPECT_EQ(picked.size(), 2u);
  EXPECT_TRUE(std::find(picked.begin(), picked.end(), 2u) != picked.end());
  EXPECT_FALSE(std::find(picked.begin(), picked.end(), 0u) != picked.end() &&
               std::find(picked.begin(), picked.end(), 1u) != picked.end());
}

TEST(Reviews, GsonListCommentsAttached) {
  const auto& s = scenario("1002-0");
  std::set<std::string> comments;
  for (const auto& r : s.reviews) comments.insert(r.sentence.comment_id.value_or(""));
  EXPECT_EQ(comments, (std::set<std::string>{"5001", "5002"}));
  const auto buggy = std::find_if(s.reviews.begin(), s.reviews.end(),
                                  [](const Opinion& o) { return o.sentence.text == "The code is buggy."; });
  ASSERT_NE(buggy, s.reviews.end());
  EXPECT_EQ(buggy->polarity, Polarity::kNegative);
  for (const auto& r : s.reviews) EXPECT_NE(r.polarity, Polarity::kNeutral);
}

TEST(Reviews, NoCommentsNoReviews) {
  const LexiconDetector d;
  Post p;
  p.id = "1";
  EXPECT_TRUE(associate_reviews({}, p, *db().find("Jackson"), {"ObjectMapper"}, d).empty());
}

TEST(Reviews, NeutralSentencesAreCountedNotKept) {
  const LexiconDetector d;
  Post p;
  p.id = "1";
  Comment c;
  c.id = "9";
  c.text = "Gson is great. I ran gson on Tuesday.";
  std::size_t neutral = 0;
  const auto got = associate_reviews({c}, p, *db().find("Google Gson"), {"Gson"}, d, &neutral);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].polarity, Polarity::kPositive);
  EXPECT_EQ(neutral, 1u);
}

TEST(Reviews, ReferenceRules) {
  const auto& gson = *db().find("Google Gson");
  const std::vector<std::string> types = {"Gson", "TypeToken"};
  EXPECT_TRUE(comment_references_api("gson is nice", gson, types, "Lena"));          // alias, any case
  EXPECT_TRUE(comment_references_api("the TypeToken trick", gson, types, "Lena"));
  EXPECT_FALSE(comment_references_api("the typetoken trick", gson, types, "Lena"));  // type names are exact
  EXPECT_TRUE(comment_references_api("@lena thanks", gson, types, "Lena"));
  EXPECT_TRUE(comment_references_api("@JonSkeet right", gson, types, "Jon Skeet"));
  EXPECT_FALSE(comment_references_api("Retrofit is awesome", gson, types, "Lena"));
}

TEST(Reviews, ProvenanceAndOneApi) {
  std::map<std::string, const Post*> posts;
  for (const auto& t : corpus().threads) {
    for (const auto& a : t.answers) posts[a.id] = &a;
  }
  for (const auto& s : mined()) {
    EXPECT_NE(db().find(s.api), nullptr);
    const Post* p = posts.at(s.post_id);
    for (const auto& r : s.reviews) {
      ASSERT_TRUE(r.sentence.comment_id);
      const bool owned = std::any_of(p->comments.begin(), p->comments.end(),
                                     [&](const Comment& c) { return c.id == *r.sentence.comment_id; });
      EXPECT_TRUE(owned) << s.id;
    }
  }
}

TEST(MineScenarios, EmptyCorpus) {
  MiningReport report;
  EXPECT_TRUE(mine_scenarios(Corpus{}, db(), {}, &report).empty());
  EXPECT_EQ(report.threads, 0u);
}

TEST(MineScenarios, MatchesManifestCounts) {
  MiningReport report;
  const auto s = mine_scenarios(corpus(), db(), {}, &report);
  const auto manifest = fixture_json("fixture_manifest.json");
  std::map<std::string, std::size_t> by_api;
  for (const auto& x : s) by_api[x.api]++;
  EXPECT_EQ(by_api, manifest["scenarios"].get<decltype(by_api)>());
  EXPECT_EQ(report.dropped, manifest["dropped"].get<decltype(report.dropped)>());
  EXPECT_EQ(report.snippets, manifest["answer_snippets"].get<std::size_t>());
}

TEST(MineScenarios, MatchesGoldenFile) {
  EXPECT_EQ(scenarios_to_json(mined()), testutil::read_file(fixture("golden_scenarios.json")));
}

TEST(MineScenarios, IndependentOfThreadCount) {
  Config one, many;
  one.threads = 1;
  many.threads = 4;
  EXPECT_EQ(mine_scenarios(corpus(), db(), one), mine_scenarios(corpus(), db(), many));
}

TEST(MineScenarios, QuestionsOptIn) {
  Config c;
  c.include_questions = true;
  MiningReport report;
  mine_scenarios(corpus(), db(), c, &report);
  EXPECT_EQ(report.snippets, fixture_json("fixture_manifest.json")["snippets"].get<std::size_t>());
}

TEST(MineScenarios, ScenarioFields) {
  const auto& s = scenario("1051-0");
  EXPECT_EQ(s.api, "Jackson");
  EXPECT_EQ(s.thread_id, "1050");
  EXPECT_EQ(s.title, "Ignore unknown fields when reading a REST response with Jackson");
  EXPECT_EQ(s.url, "https://stackoverflow.com/a/1051");
  EXPECT_EQ(s.api_types, (std::vector<std::string>{"DeserializationFeature", "ObjectMapper"}));
  EXPECT_NE(std::find(s.other_apis.begin(), s.other_apis.end(), "javax.ws.rs"), s.other_apis.end());
  EXPECT_EQ(s.type_fqns.at("ObjectMapper"), "com.fasterxml.jackson.databind.ObjectMapper");
  EXPECT_EQ(format_timestamp(s.created_at), "2017-01-21T10:00:00Z");
}

// Swapping the detector changes opinions only.
TEST(MineScenarios, DetectorSwapKeepsStructure) {
  Config none;
  none.sentiment.detector = "none";
  const auto a = mined();
  const auto b = mine_scenarios(corpus(), db(), none);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].api, b[i].api);
    EXPECT_EQ(a[i].snippet, b[i].snippet);
    EXPECT_EQ(a[i].description, b[i].description);
    EXPECT_EQ(a[i].api_types, b[i].api_types);
    EXPECT_TRUE(b[i].reviews.empty());
  }
}

TEST(Serialize, RoundTrip) {
  const auto& s = mined();
  EXPECT_EQ(scenarios_from_json(scenarios_to_json(s)), s);
  testutil::TempDir dir("serialize");
  save_scenarios(dir.path() / "nested" / "s.json", s);
  EXPECT_EQ(load_scenarios(dir.path() / "nested" / "s.json"), s);
  EXPECT_THROW(scenarios_from_json("{\"a\":1}"), FormatError);
  EXPECT_THROW(load_scenarios(dir.path() / "missing.json"), FormatError);
}
