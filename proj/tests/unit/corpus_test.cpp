#include <gtest/gtest.h>

#include <set>

#include "scenariodoc/corpus.hpp"
#include "scenariodoc/opinions.hpp"
#include "scenariodoc/snippets.hpp"
#include "scenariodoc/text.hpp"
#include "test_util.hpp"

using namespace scenariodoc;
using testutil::fixture;
using testutil::fixture_json;

namespace {

Corpus fixture_corpus() {
  return load_corpus(fixture("fixture_threads.jsonl"), CorpusFormat::kJsonLines);
}

}  // namespace

TEST(Corpus, FixtureMatchesHandCountedManifest) {
  const auto manifest = fixture_json("fixture_manifest.json");
  Diagnostics diag;
  const auto corpus = load_corpus(fixture("fixture_threads.jsonl"), CorpusFormat::kJsonLines, &diag);
  EXPECT_TRUE(diag.empty());
  EXPECT_EQ(corpus.threads.size(), manifest["threads"].get<std::size_t>());
  EXPECT_EQ(corpus.post_count(), manifest["posts"].get<std::size_t>());
  EXPECT_EQ(corpus.comment_count(), manifest["comments"].get<std::size_t>());
}

TEST(Corpus, EmptyFileGivesNoThreads) {
  testutil::TempDir dir("corpus");
  const auto path = dir.path() / "empty.jsonl";
  { std::ofstream(path).flush(); }
  EXPECT_TRUE(load_corpus(path, CorpusFormat::kJsonLines).threads.empty());
  EXPECT_TRUE(parse_json_lines("").threads.empty());
  EXPECT_TRUE(parse_json_lines("\n\n  \n").threads.empty());
}

TEST(Corpus, UnreadableFileThrows) {
  EXPECT_THROW(load_corpus("/nonexistent/threads.jsonl", CorpusFormat::kJsonLines), CorpusError);
  EXPECT_THROW(load_corpus("/nonexistent/dump", CorpusFormat::kXmlDump), CorpusError);
}

TEST(Corpus, MalformedRecordsAreSkippedWithWarnings) {
  const std::string good =
      R"({"id":"1","title":"t","question":{"id":"1","body_html":"<p>q</p>","created_at":"2014-01-01T00:00:00Z"},"answers":[]})";
  const std::string no_time =
      R"({"id":"2","title":"t","question":{"id":"2","body_html":"<p>q</p>"},"answers":[]})";
  const std::string bad_answer_time =
      R"({"id":"3","title":"t","question":{"id":"3","body_html":"<p>q</p>","created_at":"2014-01-01"},)"
      R"("answers":[{"id":"4","body_html":"<p>a</p>","created_at":"yesterday"},{"id":"5","body_html":"<p>b</p>","created_at":"2014-01-02"}]})";
  Diagnostics diag;
  const auto c = parse_json_lines(good + "\n{not json\n" + no_time + "\n" + bad_answer_time + "\n", &diag);
  ASSERT_EQ(c.threads.size(), 2u);
  EXPECT_EQ(c.threads[0].id, "1");
  EXPECT_EQ(c.threads[1].id, "3");
  ASSERT_EQ(c.threads[1].answers.size(), 1u);
  EXPECT_EQ(c.threads[1].answers[0].id, "5");
  EXPECT_GE(diag.warnings.size(), 3u);
}

TEST(Corpus, ReloadIsIdempotent) {
  EXPECT_EQ(fixture_corpus(), fixture_corpus());
}

TEST(Corpus, StructuralInvariants) {
  const auto corpus = fixture_corpus();
  std::set<std::string> thread_ids;
  std::set<std::string> comment_ids;
  for (const auto& t : corpus.threads) {
    EXPECT_TRUE(thread_ids.insert(t.id).second) << t.id;
    EXPECT_FALSE(t.question.body_html.empty());
    for (const auto& a : t.answers) {
      EXPECT_EQ(a.parent_id, t.id);
      EXPECT_FALSE(a.body_html.empty());
    }
    auto collect = [&](const Post& p) {
      for (const auto& c : p.comments) EXPECT_TRUE(comment_ids.insert(c.id).second) << c.id;
    };
    collect(t.question);
    for (const auto& a : t.answers) collect(a);
  }
}

TEST(Corpus, XmlDumpMatchesJsonLines) {
  Diagnostics diag;
  const auto xml = load_corpus(fixture("xmldump"), CorpusFormat::kXmlDump, &diag);
  EXPECT_TRUE(diag.empty());
  const auto json = fixture_corpus();
  ASSERT_EQ(xml.threads.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    // The dump keeps everything the jsonl carries for these threads.
    EXPECT_EQ(xml.threads[i], json.threads[i]) << "thread " << i;
  }
}

TEST(Corpus, XmlPostsFileAlone) {
  const auto c = load_corpus(fixture("xmldump/Posts.xml"), CorpusFormat::kXmlDump);
  ASSERT_EQ(c.threads.size(), 2u);
  EXPECT_EQ(c.comment_count(), 0u);
}

TEST(Corpus, FormatNames) {
  EXPECT_EQ(corpus_format_from_string("json-lines"), CorpusFormat::kJsonLines);
  EXPECT_EQ(corpus_format_from_string("xml-dump"), CorpusFormat::kXmlDump);
  EXPECT_THROW(corpus_format_from_string("csv"), CorpusError);
}

TEST(CorpusStats, FixtureMatchesManifest) {
  const auto manifest = fixture_json("fixture_manifest.json");
  const auto s = corpus_stats(fixture_corpus());
  EXPECT_EQ(s.threads, 10u);
  EXPECT_EQ(s.posts, manifest["posts"].get<std::size_t>() + manifest["comments"].get<std::size_t>());
  EXPECT_EQ(s.comments, manifest["comments"].get<std::size_t>());
  EXPECT_EQ(s.snippets, manifest["snippets"].get<std::size_t>());
  EXPECT_EQ(s.users, manifest["users"].get<std::size_t>());
  EXPECT_DOUBLE_EQ(s.avg_posts(), static_cast<double>(s.posts) / 10.0);
}

TEST(CorpusStats, EmptyCorpusIsAllZero) {
  const auto s = corpus_stats(Corpus{});
  EXPECT_EQ(s.threads, 0u);
  EXPECT_EQ(s.posts, 0u);
  EXPECT_EQ(s.avg_posts(), 0.0);
  EXPECT_EQ(s.avg_sentences(), 0.0);
  EXPECT_EQ(s.avg_lines_per_snippet(), 0.0);
}

// Totals equal a per-thread recount done here independently.
TEST(CorpusStats, TotalsEqualPerThreadRecount) {
  const auto corpus = fixture_corpus();
  const auto s = corpus_stats(corpus);
  std::size_t posts = 0, sentences = 0, words = 0, snippets = 0, participations = 0;
  std::set<std::string> users;
  for (const auto& t : corpus.threads) {
    Corpus one;
    one.threads.push_back(t);
    const auto st = corpus_stats(one);
    posts += st.posts;
    sentences += st.sentences;
    words += st.words;
    snippets += st.snippets;
    participations += st.users;
    EXPECT_EQ(st.user_participations, st.users);
    auto add = [&](const Post& p) {
      users.insert(p.author);
      for (const auto& c : p.comments) users.insert(c.author);
    };
    add(t.question);
    for (const auto& a : t.answers) add(a);
  }
  EXPECT_EQ(s.posts, posts);
  EXPECT_EQ(s.sentences, sentences);
  EXPECT_EQ(s.words, words);
  EXPECT_EQ(s.snippets, snippets);
  EXPECT_EQ(s.user_participations, participations);
  EXPECT_EQ(s.users, users.size());
}

TEST(CorpusStats, SentencesAndSnippetsOfOnePost) {
  Corpus c;
  Thread t;
  t.id = "1";
  t.question.id = "1";
  t.question.author = "a";
  t.question.body_html = "<p>First one. Second one.</p><pre><code>int x = 1;\nint y = 2;\n\nint z;</code></pre>";
  Comment cm;
  cm.id = "9";
  cm.author = "b";
  cm.text = "A comment here.";
  t.question.comments.push_back(cm);
  c.threads.push_back(t);
  const auto s = corpus_stats(c);
  EXPECT_EQ(s.sentences, 3u);
  EXPECT_EQ(s.snippets, 1u);
  EXPECT_EQ(s.snippet_lines, 3u);
  EXPECT_EQ(s.users, 2u);
  EXPECT_EQ(s.posts, 2u);
}
