#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scenariodoc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResolveWeights {
  double import_match = 1.0;
  double package_match = 0.7;
  double bare_match = 0.5;
};

struct ClassifierOptions {
  int min_lines = 2;
  double java_threshold = 0.5;
};

struct LinkOptions {
  double type_weight = 0.7;     // alpha
  double mention_weight = 0.3;  // beta
  double floor = 0.2;
};

struct DescriptionOptions {
  int max_sentences = 3;
  double damping = 0.85;
  int iterations = 30;
  int beam_width = 5;
  double redundancy_penalty = 0.5;
};

struct SentimentOptions {
  std::string detector = "lexicon";
  std::string positive_lexicon;  // empty: bundled list
  std::string negative_lexicon;
  int negation_window = 3;
  double neutral_band = 1.0;
  double exclamation_boost = 0.5;
};

struct ConceptOptions {
  int min_support = 2;
  double clone_threshold = 0.6;
  int clone_min_lines = 5;
};

struct Config {
  bool include_questions = false;
  bool builtin_jdk = true;
  int threads = 0;  // 0: hardware concurrency
  std::string answer_url = "https://stackoverflow.com/a/{post}";
  std::string question_url = "https://stackoverflow.com/q/{post}";

  ResolveWeights resolve;
  ClassifierOptions classifier;
  LinkOptions link;
  DescriptionOptions description;
  SentimentOptions sentiment;
  ConceptOptions concepts;

  // `key` is "section.name" (e.g. "concept.min_support"); throws ConfigError on
  // unknown keys or unparsable values.
  void set(std::string_view key, std::string_view value);

  // Minimal TOML subset: [section] headers, key = value, '#' comments,
  // quoted strings, numbers, true/false.
  void merge_toml(std::string_view source);
  void merge_file(const std::filesystem::path& path);

  // SCENARIODOC_<SECTION>_<NAME>=value overrides, read through `getenv`.
  void merge_env(const std::function<const char*(const char*)>& getenv);

  // Throws ConfigError naming the first out-of-range setting.
  void validate() const;

  // Stable textual form of every generation-relevant setting.
  std::string canonical() const;
  std::string hash() const;  // 16 hex digits (FNV-1a 64 over canonical())

  // Reads SCENARIODOC_CONFIG (if set) and env overrides.
  static Config from_environment();
};

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

}  // namespace scenariodoc
