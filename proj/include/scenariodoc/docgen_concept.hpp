#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scenariodoc/apidb.hpp"
#include "scenariodoc/config.hpp"
#include "scenariodoc/docgen_stats.hpp"
#include "scenariodoc/miner.hpp"

namespace scenariodoc {

using Itemset = std::vector<std::string>;  // sorted, no duplicates

struct FrequentItemset {
  Itemset items;
  std::size_t support = 0;
  friend auto operator<=>(const FrequentItemset&, const FrequentItemset&) = default;
};

// FP-Growth. Exactly the itemsets contained in at least `min_support`
// transactions, ordered by support descending, then itemset ascending.
// Duplicate items inside a transaction count once.
std::vector<FrequentItemset> mine_frequent_itemsets(const std::vector<Itemset>& transactions,
                                                    std::size_t min_support);

// |S ∩ P| / |S|; 0 for an empty S.
double pattern_similarity(const Itemset& scenario_types, const Itemset& pattern);

struct Pattern {
  Itemset itemset;
  std::size_t support = 0;
  std::vector<std::size_t> scenarios;  // indices into the scenario list, ascending
  std::vector<Itemset> absorbed;       // sub-itemsets merged into this pattern
  std::vector<std::vector<std::size_t>> subgroups;  // clone groups over `scenarios`
  bool residual = false;  // built from one scenario with no similar frequent itemset

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// One pattern per frequent itemset (same order) followed by one residual
// pattern per scenario whose best similarity is 0. Each scenario goes to the
// pattern of maximal similarity, then maximal support, then the smallest itemset.
std::vector<Pattern> assign_scenarios_to_patterns(const std::vector<Itemset>& scenario_types,
                                                  const std::vector<FrequentItemset>& itemsets);

// Folds each pattern into the unique maximal pattern whose itemset strictly
// contains it. Patterns with several maximal supersets stay, as do residual
// patterns. Patterns left without scenarios are dropped.
std::vector<Pattern> group_subpatterns(std::vector<Pattern> patterns);

// 1 - line edit distance / max(lines) over normalized lines; 0 when either
// side has fewer than `min_lines` normalized lines.
double clone_similarity(std::string_view a, std::string_view b, int min_lines = 5);

// Union-find groups of scenarios whose pairwise clone similarity reaches the threshold.
std::vector<std::vector<std::size_t>> clone_subgroups(const std::vector<std::size_t>& members,
                                                      const std::vector<std::string>& code,
                                                      const ConceptOptions& options = {});

// Flow facts of a pattern reduced to what the edge test compares.
struct FlowKey {
  std::string type;      // FQN when resolvable, else "<local>"
  std::string producer;  // "Receiver.method"
  friend auto operator<=>(const FlowKey&, const FlowKey&) = default;
};

struct PatternFlow {
  std::vector<FlowKey> outputs;  // terminal outputs produced by the API
  std::vector<FlowKey> inputs;   // arguments that came from a call of the API
};

PatternFlow pattern_flow(const Pattern& pattern, const ScenarioRefs& scenarios, const ApiRecord& api);

// Undirected edges (i < j) between patterns where one's output feeds the other's input.
std::vector<std::pair<std::size_t, std::size_t>> connect_patterns(const std::vector<PatternFlow>& flows);

struct Concept {
  int id = 0;
  std::vector<std::size_t> patterns;   // indices into ConceptDocumentation::patterns
  std::size_t representative = 0;      // scenario index
  std::vector<std::size_t> see_also;   // scenario indices, newest first
  std::optional<StarRating> rating;
  std::string title;

  std::size_t size() const { return see_also.size() + 1; }
  friend bool operator==(const Concept&, const Concept&) = default;
};

// Concepts are connected components of the pattern graph, newest
// representative first, numbered from 1.
std::vector<Concept> build_concepts(const std::vector<Pattern>& patterns,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    const ScenarioRefs& scenarios);

struct ConceptDocumentation {
  std::vector<FrequentItemset> itemsets;
  std::vector<Pattern> patterns;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<Concept> concepts;
};

// Whole concept pipeline for one API's scenarios.
ConceptDocumentation build_concept_documentation(const ApiRecord& api, const ScenarioRefs& scenarios,
                                                 const ConceptOptions& options = {});

}  // namespace scenariodoc
