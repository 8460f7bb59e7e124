#include <algorithm>
#include <cmath>
#include <set>

#include "scenariodoc/miner.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

const std::set<std::string>& stopwords() {
  static const std::set<std::string> kWords{
      "a",    "an",   "the",  "and",  "or",   "but",  "if",   "of",   "to",   "in",   "on",  "for",
      "with", "at",   "by",   "from", "is",   "are",  "was",  "were", "be",   "been", "it",  "its",
      "this", "that", "these", "those", "as", "so",   "do",   "does", "you",  "your", "i",   "we",
      "can",  "will", "would", "should", "have", "has", "then", "than", "there", "here", "also"};
  return kWords;
}

std::set<std::string> content_words(std::string_view s) {
  std::set<std::string> out;
  for (auto& w : text::words(s)) {
    if (!stopwords().contains(w)) out.insert(std::move(w));
  }
  return out;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& w : a) common += b.contains(w) ? 1 : 0;
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

// Case-sensitive whole-word search.
bool has_word(std::string_view hay, std::string_view word) {
  if (word.empty()) return false;
  for (std::size_t pos = hay.find(word); pos != std::string_view::npos; pos = hay.find(word, pos + 1)) {
    const bool left = pos == 0 || !text::is_ident_char(hay[pos - 1]);
    const std::size_t end = pos + word.size();
    const bool right = end >= hay.size() || !text::is_ident_char(hay[end]);
    if (left && right) return true;
  }
  return false;
}

struct BeamState {
  std::vector<std::size_t> picked;  // positions in the candidate list
  double score = 0.0;
};

}  // namespace

std::vector<double> textrank(const std::vector<std::string>& sentences, double damping, int iterations) {
  const std::size_t n = sentences.size();
  std::vector<std::set<std::string>> words;
  words.reserve(n);
  for (const auto& s : sentences) words.push_back(content_words(s));
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t common = 0;
      for (const auto& x : words[i]) common += words[j].contains(x) ? 1 : 0;
      if (common == 0) continue;
      double denom = std::log(static_cast<double>(words[i].size())) + std::log(static_cast<double>(words[j].size()));
      if (denom <= 0.0) denom = 1.0;
      w[i][j] = w[j][i] = static_cast<double>(common) / denom;
    }
  }
  std::vector<double> out_weight(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out_weight[i] += w[i][j];
  }
  std::vector<double> score(n, 1.0);
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> next(n, 1.0 - damping);
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (w[j][i] > 0.0) sum += w[j][i] / out_weight[j] * score[j];
      }
      next[i] += damping * sum;
    }
    score.swap(next);
  }
  return score;
}

std::vector<std::size_t> beam_select(const std::vector<std::string>& sentences,
                                     const std::vector<double>& centrality,
                                     const std::vector<std::size_t>& candidates,
                                     const DescriptionOptions& options) {
  std::vector<std::set<std::string>> words(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) words[k] = content_words(sentences[candidates[k]]);

  auto better = [](const BeamState& a, const BeamState& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.picked < b.picked;
  };

  std::vector<BeamState> frontier{BeamState{}};
  BeamState best;
  bool have_best = false;
  const std::size_t width = static_cast<std::size_t>(std::max(1, options.beam_width));
  for (int depth = 0; depth < options.max_sentences; ++depth) {
    std::vector<BeamState> next;
    for (const auto& st : frontier) {
      const std::size_t from = st.picked.empty() ? 0 : st.picked.back() + 1;
      for (std::size_t k = from; k < candidates.size(); ++k) {
        BeamState s = st;
        double gain = centrality[candidates[k]];
        for (const auto p : st.picked) gain -= options.redundancy_penalty * jaccard(words[p], words[k]);
        s.picked.push_back(k);
        s.score += gain;
        next.push_back(std::move(s));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), better);
    if (next.size() > width) next.resize(width);
    if (!have_best || better(next.front(), best)) {
      best = next.front();
      have_best = true;
    }
    frontier = std::move(next);
  }
  std::vector<std::size_t> out;
  for (const auto k : best.picked) out.push_back(candidates[k]);
  std::sort(out.begin(), out.end());
  return out;
}

bool refers_to_api(std::string_view sentence, const ApiRecord& api) {
  for (const auto& s : api.spellings()) {
    if (text::mentions(sentence, s)) return true;
  }
  for (const auto& [simple, fqn] : api.types) {
    if (has_word(sentence, simple)) return true;
  }
  return false;
}

Description generate_description(const std::vector<Sentence>& post_sentences, const ApiRecord& api,
                                 int snippet_block, const DescriptionOptions& options) {
  Description d;
  std::vector<std::string> texts;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < post_sentences.size(); ++i) {
    texts.push_back(post_sentences[i].text);
    if (refers_to_api(post_sentences[i].text, api)) candidates.push_back(i);
  }
  if (candidates.empty()) {
    d.fallback = true;
    const Sentence* before = nullptr;
    for (const auto& s : post_sentences) {
      if (s.block < snippet_block) before = &s;
    }
    if (before != nullptr) d.sentences.push_back(*before);
    return d;
  }
  const auto centrality = textrank(texts, options.damping, options.iterations);
  for (const auto i : beam_select(texts, centrality, candidates, options)) d.sentences.push_back(post_sentences[i]);
  return d;
}

}  // namespace scenariodoc
