#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scenariodoc/diagnostics.hpp"
#include "scenariodoc/time.hpp"

namespace scenariodoc {

struct Comment {
  std::string id;
  std::string text;
  Timestamp created_at{};
  std::string author;

  friend bool operator==(const Comment&, const Comment&) = default;
};

struct Post {
  std::string id;
  std::string parent_id;  // thread id for answers, empty for the question
  std::string body_html;
  Timestamp created_at{};
  int score = 0;
  std::string author;
  std::vector<Comment> comments;

  friend bool operator==(const Post&, const Post&) = default;
};

struct Thread {
  std::string id;
  std::string title;
  Post question;
  std::vector<Post> answers;
  std::vector<std::string> tags;

  friend bool operator==(const Thread&, const Thread&) = default;
};

// Immutable after loading; safe to share across worker threads.
struct Corpus {
  std::vector<Thread> threads;

  std::size_t post_count() const;     // questions + answers
  std::size_t comment_count() const;
  Timestamp latest_activity() const;  // newest post or comment timestamp

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class CorpusFormat { kJsonLines, kXmlDump };

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CorpusFormat corpus_format_from_string(std::string_view name);  // "json-lines" | "xml-dump"

// Malformed records are skipped with a warning; only an unreadable input
// throws CorpusError. For kXmlDump `path` may be a Posts.xml-style file or a
// directory holding Posts.xml and (optionally) Comments.xml.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   Diagnostics* diag = nullptr);

Corpus parse_json_lines(std::string_view content, Diagnostics* diag = nullptr);
Corpus parse_xml_dump(std::string_view posts_xml, std::string_view comments_xml,
                      Diagnostics* diag = nullptr);

struct CorpusStats {
  std::size_t threads = 0;
  std::size_t posts = 0;  // questions + answers + comments
  std::size_t comments = 0;
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::size_t snippets = 0;
  std::size_t snippet_lines = 0;
  std::size_t users = 0;               // distinct authors across the corpus
  std::size_t user_participations = 0; // sum over threads of distinct authors

  double avg_posts() const { return per_thread(posts); }
  double avg_sentences() const { return per_thread(sentences); }
  double avg_words() const { return per_thread(words); }
  double avg_snippets() const { return per_thread(snippets); }
  double avg_users() const { return per_thread(user_participations); }
  double avg_lines_per_snippet() const {
    return snippets == 0 ? 0.0 : static_cast<double>(snippet_lines) / static_cast<double>(snippets);
  }

 private:
  double per_thread(std::size_t n) const {
    return threads == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(threads);
  }
};

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace scenariodoc
