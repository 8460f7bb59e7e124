#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scenariodoc/apidb.hpp"
#include "scenariodoc/config.hpp"
#include "scenariodoc/corpus.hpp"
#include "scenariodoc/diagnostics.hpp"
#include "scenariodoc/opinions.hpp"
#include "scenariodoc/snippets.hpp"

namespace scenariodoc {

struct UsageScenario {
  std::string id;  // "<post id>-<snippet index>"
  std::string api;
  CodeSnippet snippet;
  std::vector<std::string> api_types;              // simple names of the linked API's types, sorted
  std::map<std::string, std::string> type_fqns;    // simple -> resolved FQN (any API)
  std::vector<std::string> other_apis;             // other APIs seen in types or imports, sorted
  std::vector<Sentence> description;
  bool description_fallback = false;
  std::vector<Opinion> reviews;  // positive or negative only
  Timestamp created_at{};
  std::string thread_id;
  std::string post_id;
  std::string title;
  std::string url;
  double link_score = 0.0;
  DataflowFacts dataflow;

  std::size_t positives() const;
  std::size_t negatives() const;

  friend bool operator==(const UsageScenario&, const UsageScenario&) = default;
};

// Prose around a snippet that linking may consult.
struct PostContext {
  std::string answer_text;
  std::string question_text;
  std::string title;
};

struct LinkResult {
  const ApiRecord* api = nullptr;
  double score = 0.0;
  double type_fraction = 0.0;
  double mention = 0.0;
};

// Context for resolving the snippet's simple type names: imports plus FQNs
// written inline in the code.
ResolveContext resolve_context_for(const CodeSnippet& snippet);

// Best-scoring API id and FQN for each type used by the snippet. When several
// candidates tie on score, all of their APIs are reported.
struct TypeResolution {
  std::string simple;
  std::vector<FqnCandidate> top;  // candidates holding the top score
};
std::vector<TypeResolution> resolve_types(const CodeSnippet& snippet, const ApiDb& db,
                                          const ResolveWeights& weights = {});

std::optional<LinkResult> link_snippet_to_api(const CodeSnippet& snippet, const PostContext& context,
                                              const ApiDb& db, const Config& config = {});

// TextRank centrality over the sentences (unnormalized PageRank form).
std::vector<double> textrank(const std::vector<std::string>& sentences, double damping = 0.85,
                             int iterations = 30);

// Subset of candidate indices chosen by beam search: maximizes the sum of
// centralities minus a pairwise Jaccard redundancy penalty. Result is sorted.
std::vector<std::size_t> beam_select(const std::vector<std::string>& sentences,
                                     const std::vector<double>& centrality,
                                     const std::vector<std::size_t>& candidates,
                                     const DescriptionOptions& options = {});

// True when the sentence names the API (name or alias) or one of its types.
bool refers_to_api(std::string_view sentence, const ApiRecord& api);

struct Description {
  std::vector<Sentence> sentences;
  bool fallback = false;
};

// `post_sentences` are the answer's prose sentences in document order;
// `snippet_block` is the body block index of the snippet being described.
Description generate_description(const std::vector<Sentence>& post_sentences, const ApiRecord& api,
                                 int snippet_block, const DescriptionOptions& options = {});

// True when a comment names the API, one of `type_names`, or addresses
// `answer_author` with '@'.
bool comment_references_api(std::string_view comment, const ApiRecord& api,
                            const std::vector<std::string>& type_names, std::string_view answer_author);

std::vector<Opinion> associate_reviews(const std::vector<Comment>& comments, const Post& post,
                                       const ApiRecord& api, const std::vector<std::string>& type_names,
                                       const PolarityDetector& detector, std::size_t* neutral = nullptr);

struct MiningReport {
  std::size_t threads = 0;
  std::size_t posts = 0;
  std::size_t snippets = 0;
  std::size_t neutral_opinions = 0;  // review sentences dropped as neutral
  std::map<std::string, std::size_t> dropped;  // reason -> count

  friend bool operator==(const MiningReport&, const MiningReport&) = default;
};

// Deterministic for a fixed (corpus, db, config); threads are mined in
// parallel and merged in corpus order.
std::vector<UsageScenario> mine_scenarios(const Corpus& corpus, const ApiDb& db, const Config& config = {},
                                          MiningReport* report = nullptr, Diagnostics* diag = nullptr);

}  // namespace scenariodoc
