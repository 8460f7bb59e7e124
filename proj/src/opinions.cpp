#include "scenariodoc/opinions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

constexpr std::array<std::string_view, 22> kAbbreviations{
    "e.g", "i.e", "etc", "vs", "mr", "mrs", "dr", "prof", "approx", "cf", "eg", "ie",
    "fig", "no", "resp", "viz", "al", "inc", "ltd", "jr", "sr", "st"};

bool is_abbreviation(std::string_view word) {
  const auto w = text::to_lower(word);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), w) != kAbbreviations.end();
}

bool closes_sentence_quote(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

// Word ending right before position `dot` (letters and inner dots).
std::string_view word_before(std::string_view s, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && (text::is_ident_char(s[b - 1]) || s[b - 1] == '.')) --b;
  return s.substr(b, dot - b);
}

void split_paragraph(std::string_view para, std::vector<std::string>& out) {
  std::size_t start = 0;
  std::size_t i = 0;
  auto emit = [&](std::size_t end) {
    auto piece = text::trim(para.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
    start = end;
  };
  while (i < para.size()) {
    const char c = para[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < para.size() && (para[j] == '.' || para[j] == '!' || para[j] == '?')) ++j;
    const bool single_dot = c == '.' && j == i + 1;
    while (j < para.size() && closes_sentence_quote(para[j])) ++j;
    if (j < para.size() && !text::is_space(para[j])) {
      i = j;
      continue;  // dotted name, version number, URL
    }
    bool boundary = true;
    if (single_dot) {
      const auto w = word_before(para, i);
      if (is_abbreviation(w)) boundary = false;
      if (w.size() == 1 && text::is_upper(w[0])) boundary = false;  // initial
    }
    if (para.substr(i, 3) == "...") {
      std::size_t k = j;
      while (k < para.size() && text::is_space(para[k])) ++k;
      if (k < para.size() && text::is_lower(para[k])) boundary = false;  // trailing-off ellipsis
    }
    if (boundary) emit(j);
    i = j;
  }
  emit(para.size());
}

}  // namespace

std::string_view to_string(SentenceSource s) {
  switch (s) {
    case SentenceSource::kQuestionBody: return "question-body";
    case SentenceSource::kAnswerBody: return "answer-body";
    case SentenceSource::kComment: return "comment";
  }
  return "answer-body";
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    // paragraphs end at a line holding only whitespace
    std::size_t end = pos;
    std::size_t next = text.size() + 1;
    while (end < text.size()) {
      if (text[end] == '\n') {
        std::size_t k = end + 1;
        while (k < text.size() && text[k] != '\n' && text::is_space(text[k])) ++k;
        if (k < text.size() && text[k] == '\n') {
          next = k + 1;
          break;
        }
      }
      ++end;
    }
    std::string para(text.substr(pos, end - pos));
    std::replace_if(para.begin(), para.end(), [](char c) { return c == '\n' || c == '\r' || c == '\t'; }, ' ');
    split_paragraph(para, out);
    pos = next;
  }
  return out;
}

std::vector<Sentence> tokenize_sentences(std::string_view text) {
  return tokenize_sentences(text, SentenceSource::kAnswerBody, "");
}

std::vector<Sentence> tokenize_sentences(std::string_view text, SentenceSource source,
                                         std::string_view post_id,
                                         std::optional<std::string> comment_id, Timestamp created_at) {
  std::vector<Sentence> out;
  int position = 0;
  for (auto& s : split_sentences(text)) {
    Sentence sentence;
    sentence.text = std::move(s);
    sentence.source = source;
    sentence.post_id = std::string(post_id);
    sentence.comment_id = comment_id;
    sentence.created_at = created_at;
    sentence.position = position++;
    out.push_back(std::move(sentence));
  }
  return out;
}

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::kPositive: return "positive";
    case Polarity::kNegative: return "negative";
    case Polarity::kNeutral: return "neutral";
  }
  return "neutral";
}

std::optional<Polarity> polarity_from_string(std::string_view s) {
  if (s == "positive") return Polarity::kPositive;
  if (s == "negative") return Polarity::kNegative;
  if (s == "neutral") return Polarity::kNeutral;
  return std::nullopt;
}

Polarity PolarityDetector::classify(double score) const {
  if (std::fabs(score) < neutral_band_) return Polarity::kNeutral;
  return score > 0 ? Polarity::kPositive : Polarity::kNegative;
}

Opinion PolarityDetector::detect(const Sentence& sentence) const {
  const double s = score(sentence.text);
  return Opinion{sentence, classify(s), s};
}

Lexicon Lexicon::bundled() {
  static const char* const kPositive = R"(
good great excellent awesome nice works worked working work helpful helped helps thanks thank
useful perfect perfectly love loved easy easier easiest simple simpler clean cleaner elegant
fast faster efficient reliable robust best better fine correct correctly solved solves solve
fixed fixes recommend recommended cool neat brilliant amazing handy straightforward intuitive
lightweight stable powerful flexible saved lifesaver wonderful superb impressive concise
readable smooth glad happy appreciate appreciated convenient mature fantastic quick quickly
succinct exactly beautiful beautifully charm painless effortless upvoted upvote kudos
)";
  static const char* const kNegative = R"(
bad buggy bug bugs broken wrong fails fail failed failing failure crash crashes crashed
slow slower slowest ugly horrible terrible awful useless hard harder difficult complicated
confusing confused verbose deprecated issue issues problem problems exception exceptions
leak leaks leaking poor poorly worse worst hate annoying painful clumsy bloated unstable
incorrect incorrectly messy overkill pain nightmare hacky insecure vulnerable inefficient
error errors unusable cumbersome flawed flaw disappointing misleading overcomplicated
tedious obsolete outdated weird strange unreliable nonsense breaks downvoted downvote
)";
  Lexicon lex;
  lex.positive = parse_word_list(kPositive);
  lex.negative = parse_word_list(kNegative);
  return lex;
}

std::set<std::string> Lexicon::parse_word_list(std::string_view content) {
  std::set<std::string> out;
  for (const auto& line : text::split_lines(content)) {
    auto l = text::trim(line);
    if (l.empty() || l.front() == '#') continue;
    std::istringstream in{std::string(l)};
    std::string w;
    while (in >> w) out.insert(text::to_lower(w));
  }
  return out;
}

std::set<std::string> Lexicon::read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read lexicon file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_word_list(ss.str());
}

LexiconDetector::LexiconDetector(const SentimentOptions& options, Lexicon lexicon)
    : PolarityDetector(options.neutral_band),
      lexicon_(std::move(lexicon)),
      negation_window_(options.negation_window),
      exclamation_boost_(options.exclamation_boost) {}

namespace {

bool matches(const std::set<std::string>& list, const std::string& word) {
  if (list.contains(word)) return true;
  for (const auto& e : list) {
    if (!e.empty() && e.back() == '*' && word.starts_with(std::string_view(e).substr(0, e.size() - 1))) {
      return true;
    }
  }
  return false;
}

bool is_negator(const std::string& w) {
  static const std::set<std::string> kNegators{"not", "no", "never", "without", "hardly", "cannot",
                                               "nothing", "neither", "nor", "none"};
  if (kNegators.contains(w)) return true;
  return w.size() > 3 && w.compare(w.size() - 3, 3, "n't") == 0;
}

}  // namespace

int LexiconDetector::word_value(const std::string& word) const {
  if (matches(lexicon_.positive, word)) return 1;
  if (matches(lexicon_.negative, word)) return -1;
  return 0;
}

double LexiconDetector::score(std::string_view sentence) const {
  const auto ws = text::words(sentence);
  double total = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    int v = word_value(ws[i]);
    if (v == 0) continue;
    const std::size_t from = i > static_cast<std::size_t>(negation_window_) ? i - negation_window_ : 0;
    for (std::size_t k = from; k < i; ++k) {
      if (is_negator(ws[k])) {
        v = -v;
        break;
      }
    }
    total += v;
  }
  if (sentence.find("+1") != std::string_view::npos) total += 1.0;
  if (total != 0.0 && sentence.find('!') != std::string_view::npos) {
    total += total > 0 ? exclamation_boost_ : -exclamation_boost_;
  }
  return total;
}

std::unique_ptr<PolarityDetector> make_detector(const SentimentOptions& options) {
  if (options.detector == "none") return std::make_unique<NullDetector>();
  if (options.detector != "lexicon") {
    throw ConfigError("unknown sentiment detector: " + options.detector);
  }
  Lexicon lex = Lexicon::bundled();
  if (!options.positive_lexicon.empty()) lex.positive = Lexicon::read_word_list(options.positive_lexicon);
  if (!options.negative_lexicon.empty()) lex.negative = Lexicon::read_word_list(options.negative_lexicon);
  return std::make_unique<LexiconDetector>(options, std::move(lex));
}

}  // namespace scenariodoc
