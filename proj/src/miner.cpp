#include "scenariodoc/miner.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

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

std::string without_spaces(std::string_view s) {
  std::string out;
  for (const char c : s) {
    if (!text::is_space(c)) out += c;
  }
  return out;
}

std::string expand_url(const std::string& pattern, std::string_view post_id) {
  std::string out = pattern;
  const auto pos = out.find("{post}");
  if (pos != std::string::npos) out.replace(pos, 6, post_id);
  return out;
}

struct ThreadResult {
  std::vector<UsageScenario> scenarios;
  MiningReport report;
  Diagnostics diag;
};

class ThreadMiner {
 public:
  ThreadMiner(const ApiDb& db, const Config& config, const PolarityDetector& detector)
      : db_(db), config_(config), detector_(detector) {}

  ThreadResult mine(const Thread& thread) const {
    ThreadResult r;
    r.report.threads = 1;
    const std::string question_text = body_text(thread.question.body_html);
    if (config_.include_questions) mine_post(thread, thread.question, true, question_text, r);
    for (const auto& a : thread.answers) mine_post(thread, a, false, question_text, r);
    return r;
  }

 private:
  void mine_post(const Thread& thread, const Post& post, bool is_question, const std::string& question_text,
                 ThreadResult& r) const {
    ++r.report.posts;
    const auto blocks = split_body(post.body_html, &r.diag);
    std::vector<Sentence> sentences;
    PostContext ctx;
    ctx.title = thread.title;
    ctx.question_text = is_question ? std::string{} : question_text;
    const auto source = is_question ? SentenceSource::kQuestionBody : SentenceSource::kAnswerBody;
    int position = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].kind != BodyBlock::Kind::kText) continue;
      if (!ctx.answer_text.empty()) ctx.answer_text += "\n\n";
      ctx.answer_text += blocks[b].text;
      for (auto& s : tokenize_sentences(blocks[b].text, source, post.id, std::nullopt, post.created_at)) {
        s.block = static_cast<int>(b);
        s.position = position++;
        sentences.push_back(std::move(s));
      }
    }

    int index = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].kind != BodyBlock::Kind::kCode) continue;
      RawSnippet raw{post.id, blocks[b].text, blocks[b].begin, blocks[b].end, index++};
      ++r.report.snippets;
      auto snippet = parse_java_elements(raw, config_.classifier);
      if (!snippet.validity.valid()) {
        ++r.report.dropped[std::string(to_string(snippet.validity.kind))];
        continue;
      }
      const auto link = link_snippet_to_api(snippet, ctx, db_, config_);
      if (!link) {
        ++r.report.dropped["no-api-link"];
        r.diag.warn("post " + post.id + " snippet " + std::to_string(raw.index) + ": no API above link floor");
        continue;
      }
      r.scenarios.push_back(build(thread, post, std::move(snippet), *link, sentences, static_cast<int>(b),
                                 &r.report.neutral_opinions));
    }
  }

  UsageScenario build(const Thread& thread, const Post& post, CodeSnippet snippet, const LinkResult& link,
                      const std::vector<Sentence>& sentences, int block, std::size_t* neutral) const {
    const ApiRecord& api = *link.api;
    UsageScenario s;
    s.id = post.id + "-" + std::to_string(snippet.raw.index);
    s.api = api.name;
    s.link_score = link.score;
    std::set<std::string> others;
    for (const auto& res : resolve_types(snippet, db_, config_.resolve)) {
      if (res.top.empty()) continue;
      const auto own = std::find_if(res.top.begin(), res.top.end(), [&](const FqnCandidate& c) { return c.api == &api; });
      if (own != res.top.end()) {
        s.api_types.push_back(res.simple);
        s.type_fqns[res.simple] = own->fqn;
        continue;
      }
      s.type_fqns[res.simple] = res.top.front().fqn;
      const bool unique_api = std::all_of(res.top.begin(), res.top.end(),
                                          [&](const FqnCandidate& c) { return c.api == res.top.front().api; });
      if (unique_api) others.insert(res.top.front().api->name);
    }
    for (const auto& imp : snippet.imports) {
      if (const auto* a = db_.api_for_import(imp); a != nullptr && a != &api) others.insert(a->name);
    }
    s.other_apis.assign(others.begin(), others.end());
    std::sort(s.api_types.begin(), s.api_types.end());

    auto d = generate_description(sentences, api, block, config_.description);
    s.description = std::move(d.sentences);
    s.description_fallback = d.fallback;
    s.reviews = associate_reviews(post.comments, post, api, s.api_types, detector_, neutral);
    s.created_at = post.created_at;
    s.thread_id = thread.id;
    s.post_id = post.id;
    s.title = thread.title;
    s.url = expand_url(post.parent_id.empty() ? config_.question_url : config_.answer_url, post.id);
    s.dataflow = compute_dataflow(snippet);
    s.snippet = std::move(snippet);
    return s;
  }

  const ApiDb& db_;
  const Config& config_;
  const PolarityDetector& detector_;
};

}  // namespace

std::size_t UsageScenario::positives() const {
  return static_cast<std::size_t>(std::count_if(reviews.begin(), reviews.end(), [](const Opinion& o) {
    return o.polarity == Polarity::kPositive;
  }));
}

std::size_t UsageScenario::negatives() const {
  return static_cast<std::size_t>(std::count_if(reviews.begin(), reviews.end(), [](const Opinion& o) {
    return o.polarity == Polarity::kNegative;
  }));
}

bool comment_references_api(std::string_view comment, const ApiRecord& api,
                            const std::vector<std::string>& type_names, std::string_view answer_author) {
  for (const auto& s : api.spellings()) {
    if (text::mentions(comment, s)) return true;
  }
  for (const auto& t : type_names) {
    if (has_word(comment, t)) return true;
  }
  const auto author = without_spaces(answer_author);
  if (!author.empty()) {
    const auto lowered = text::to_lower(comment);
    const auto handle = "@" + text::to_lower(author);
    for (auto pos = lowered.find(handle); pos != std::string::npos; pos = lowered.find(handle, pos + 1)) {
      const std::size_t end = pos + handle.size();
      if (end >= lowered.size() || !text::is_ident_char(lowered[end])) return true;
    }
  }
  return false;
}

std::vector<Opinion> associate_reviews(const std::vector<Comment>& comments, const Post& post,
                                       const ApiRecord& api, const std::vector<std::string>& type_names,
                                       const PolarityDetector& detector, std::size_t* neutral) {
  std::vector<Opinion> out;
  for (const auto& c : comments) {
    if (!comment_references_api(c.text, api, type_names, post.author)) continue;
    for (const auto& s : tokenize_sentences(c.text, SentenceSource::kComment, post.id, c.id, c.created_at)) {
      auto op = detector.detect(s);
      if (op.polarity != Polarity::kNeutral) {
        out.push_back(std::move(op));
      } else if (neutral != nullptr) {
        ++*neutral;
      }
    }
  }
  return out;
}

std::vector<UsageScenario> mine_scenarios(const Corpus& corpus, const ApiDb& db, const Config& config,
                                          MiningReport* report, Diagnostics* diag) {
  const auto detector = make_detector(config.sentiment);
  const ThreadMiner miner(db, config, *detector);
  std::vector<ThreadResult> results(corpus.threads.size());

  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(1, corpus.threads.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.threads.size(); i = next++) results[i] = miner.mine(corpus.threads[i]);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<UsageScenario> out;
  MiningReport total;
  for (auto& r : results) {
    for (auto& s : r.scenarios) out.push_back(std::move(s));
    total.threads += r.report.threads;
    total.posts += r.report.posts;
    total.snippets += r.report.snippets;
    total.neutral_opinions += r.report.neutral_opinions;
    for (const auto& [reason, n] : r.report.dropped) total.dropped[reason] += n;
    if (diag != nullptr) {
      for (auto& w : r.diag.warnings) diag->warn(std::move(w));
    }
  }
  if (report != nullptr) *report = std::move(total);
  return out;
}

}  // namespace scenariodoc
