#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scenariodoc/config.hpp"
#include "scenariodoc/time.hpp"

namespace scenariodoc {

enum class SentenceSource { kQuestionBody, kAnswerBody, kComment };

std::string_view to_string(SentenceSource s);

struct Sentence {
  std::string text;
  SentenceSource source = SentenceSource::kAnswerBody;
  std::string post_id;
  std::optional<std::string> comment_id;
  Timestamp created_at{};
  int position = 0;  // ordinal within the post body or comment
  int block = 0;     // index of the body block the sentence came from

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Splits prose into trimmed, non-empty sentences. A blank line always ends
// a sentence; '.', '!' and '?' end one when followed by whitespace, except
// after common abbreviations and single-letter initials.
std::vector<std::string> split_sentences(std::string_view text);

std::vector<Sentence> tokenize_sentences(std::string_view text);
std::vector<Sentence> tokenize_sentences(std::string_view text, SentenceSource source,
                                         std::string_view post_id,
                                         std::optional<std::string> comment_id = std::nullopt,
                                         Timestamp created_at = {});

enum class Polarity { kPositive, kNegative, kNeutral };

std::string_view to_string(Polarity p);
std::optional<Polarity> polarity_from_string(std::string_view s);

struct Opinion {
  Sentence sentence;
  Polarity polarity = Polarity::kNeutral;
  double score = 0.0;

  friend bool operator==(const Opinion&, const Opinion&) = default;
};

class PolarityDetector {
 public:
  virtual ~PolarityDetector() = default;
  virtual std::string_view name() const = 0;
  virtual double score(std::string_view text) const = 0;

  Polarity classify(double score) const;
  Opinion detect(const Sentence& sentence) const;
  Polarity polarity(std::string_view text) const { return classify(score(text)); }

 protected:
  explicit PolarityDetector(double neutral_band) : neutral_band_(neutral_band) {}

 private:
  double neutral_band_;
};

struct Lexicon {
  std::set<std::string> positive;
  std::set<std::string> negative;  // entries ending in '*' match by prefix

  static Lexicon bundled();
  // One word per line; blank lines and '#' comments are ignored.
  static std::set<std::string> read_word_list(const std::filesystem::path& path);
  static std::set<std::string> parse_word_list(std::string_view content);
};

class LexiconDetector final : public PolarityDetector {
 public:
  explicit LexiconDetector(const SentimentOptions& options = {}, Lexicon lexicon = Lexicon::bundled());

  std::string_view name() const override { return "lexicon"; }
  double score(std::string_view text) const override;

 private:
  int word_value(const std::string& word) const;

  Lexicon lexicon_;
  int negation_window_;
  double exclamation_boost_;
};

// Reports every sentence as neutral.
class NullDetector final : public PolarityDetector {
 public:
  NullDetector() : PolarityDetector(1.0) {}
  std::string_view name() const override { return "none"; }
  double score(std::string_view) const override { return 0.0; }
};

// "lexicon" (optionally with word lists from the options) or "none".
// Throws ConfigError for any other name.
std::unique_ptr<PolarityDetector> make_detector(const SentimentOptions& options);

}  // namespace scenariodoc
