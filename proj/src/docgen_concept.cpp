#include "scenariodoc/docgen_concept.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "scenariodoc/snippets.hpp"

namespace scenariodoc {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

bool strict_subset(const Itemset& a, const Itemset& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Itemset normalized(const Itemset& s) {
  Itemset out = s;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t line_edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    prev.swap(cur);
  }
  return prev[b.size()];
}

std::string flow_type(const UsageScenario& s, const std::string& simple) {
  if (simple.empty()) return "<local>";
  const auto it = s.type_fqns.find(simple);
  return it == s.type_fqns.end() ? "<local>" : it->second;
}

}  // namespace

double pattern_similarity(const Itemset& scenario_types, const Itemset& pattern) {
  if (scenario_types.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& t : scenario_types) {
    if (std::binary_search(pattern.begin(), pattern.end(), t)) ++common;
  }
  return static_cast<double>(common) / static_cast<double>(scenario_types.size());
}

std::vector<Pattern> assign_scenarios_to_patterns(const std::vector<Itemset>& scenario_types,
                                                  const std::vector<FrequentItemset>& itemsets) {
  std::vector<Pattern> patterns;
  patterns.reserve(itemsets.size());
  for (const auto& f : itemsets) patterns.push_back(Pattern{normalized(f.items), f.support, {}, {}, {}, false});
  std::vector<Pattern> residuals;
  for (std::size_t s = 0; s < scenario_types.size(); ++s) {
    const Itemset types = normalized(scenario_types[s]);
    std::optional<std::size_t> best;
    double best_sim = 0.0;
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const double sim = pattern_similarity(types, patterns[p].itemset);
      if (sim <= 0.0) continue;
      bool better = !best || sim > best_sim;
      if (best && sim == best_sim) {
        const auto& cur = patterns[*best];
        better = patterns[p].support > cur.support ||
                 (patterns[p].support == cur.support && patterns[p].itemset < cur.itemset);
      }
      if (better) {
        best = p;
        best_sim = sim;
      }
    }
    if (best) {
      patterns[*best].scenarios.push_back(s);
    } else {
      residuals.push_back(Pattern{types, 1, {s}, {}, {}, true});
    }
  }
  for (auto& r : residuals) patterns.push_back(std::move(r));
  return patterns;
}

std::vector<Pattern> group_subpatterns(std::vector<Pattern> patterns) {
  const std::size_t n = patterns.size();
  std::vector<std::optional<std::size_t>> target(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (patterns[p].residual) continue;
    std::vector<std::size_t> supersets;
    for (std::size_t q = 0; q < n; ++q) {
      if (!patterns[q].residual && strict_subset(patterns[p].itemset, patterns[q].itemset)) supersets.push_back(q);
    }
    std::vector<std::size_t> maximal;
    for (const auto q : supersets) {
      const bool covered = std::any_of(supersets.begin(), supersets.end(), [&](std::size_t r) {
        return strict_subset(patterns[q].itemset, patterns[r].itemset);
      });
      if (!covered) maximal.push_back(q);
    }
    if (maximal.size() == 1) target[p] = maximal.front();
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (!target[p]) continue;
    auto& dst = patterns[*target[p]];
    auto& src = patterns[p];
    dst.scenarios.insert(dst.scenarios.end(), src.scenarios.begin(), src.scenarios.end());
    dst.absorbed.push_back(src.itemset);
  }
  std::vector<Pattern> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (target[p] || patterns[p].scenarios.empty()) continue;
    auto& pat = patterns[p];
    std::sort(pat.scenarios.begin(), pat.scenarios.end());
    std::sort(pat.absorbed.begin(), pat.absorbed.end());
    out.push_back(std::move(pat));
  }
  return out;
}

double clone_similarity(std::string_view a, std::string_view b, int min_lines) {
  const auto la = normalized_lines(a);
  const auto lb = normalized_lines(b);
  const auto floor = static_cast<std::size_t>(std::max(min_lines, 1));
  if (la.size() < floor || lb.size() < floor) return 0.0;
  const std::size_t d = line_edit_distance(la, lb);
  return 1.0 - static_cast<double>(d) / static_cast<double>(std::max(la.size(), lb.size()));
}

std::vector<std::vector<std::size_t>> clone_subgroups(const std::vector<std::size_t>& members,
                                                      const std::vector<std::string>& code,
                                                      const ConceptOptions& options) {
  UnionFind uf(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (clone_similarity(code[members[i]], code[members[j]], options.clone_min_lines) >= options.clone_threshold) {
        uf.unite(i, j);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < members.size(); ++i) groups[uf.find(i)].push_back(members[i]);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PatternFlow pattern_flow(const Pattern& pattern, const ScenarioRefs& scenarios, const ApiRecord& api) {
  std::set<FlowKey> outputs;
  std::set<FlowKey> inputs;
  for (const auto idx : pattern.scenarios) {
    const auto& s = *scenarios[idx];
    for (const auto& o : s.dataflow.outputs) {
      if (api.has_type(o.producer.receiver_type)) outputs.insert(FlowKey{flow_type(s, o.type), o.producer.key()});
    }
    for (const auto& in : s.dataflow.inputs) {
      if (in.producer && api.has_type(in.producer->receiver_type)) {
        inputs.insert(FlowKey{flow_type(s, in.type), in.producer->key()});
      }
    }
  }
  return PatternFlow{{outputs.begin(), outputs.end()}, {inputs.begin(), inputs.end()}};
}

std::vector<std::pair<std::size_t, std::size_t>> connect_patterns(const std::vector<PatternFlow>& flows) {
  auto feeds = [](const PatternFlow& from, const PatternFlow& to) {
    return std::any_of(from.outputs.begin(), from.outputs.end(), [&](const FlowKey& k) {
      return std::binary_search(to.inputs.begin(), to.inputs.end(), k);
    });
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    for (std::size_t j = i + 1; j < flows.size(); ++j) {
      if (feeds(flows[i], flows[j]) || feeds(flows[j], flows[i])) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<Concept> build_concepts(const std::vector<Pattern>& patterns,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    const ScenarioRefs& scenarios) {
  UnionFind uf(patterns.size());
  for (const auto& [a, b] : edges) uf.unite(a, b);
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t p = 0; p < patterns.size(); ++p) components[uf.find(p)].push_back(p);

  auto newer = [&](std::size_t a, std::size_t b) {
    const auto& sa = *scenarios[a];
    const auto& sb = *scenarios[b];
    if (sa.created_at != sb.created_at) return sa.created_at > sb.created_at;
    return sa.id < sb.id;
  };

  std::vector<Concept> out;
  for (auto& [root, members] : components) {
    std::vector<std::size_t> scen;
    for (const auto p : members) scen.insert(scen.end(), patterns[p].scenarios.begin(), patterns[p].scenarios.end());
    if (scen.empty()) continue;
    std::sort(scen.begin(), scen.end(), newer);
    Concept c;
    c.patterns = members;
    c.representative = scen.front();
    c.see_also.assign(scen.begin() + 1, scen.end());
    std::size_t pos = 0;
    std::size_t neg = 0;
    for (const auto s : scen) {
      pos += scenarios[s]->positives();
      neg += scenarios[s]->negatives();
    }
    c.rating = star_rating(pos, neg);
    c.title = scenarios[c.representative]->title;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [&](const Concept& a, const Concept& b) {
    const auto& ra = *scenarios[a.representative];
    const auto& rb = *scenarios[b.representative];
    if (ra.created_at != rb.created_at) return ra.created_at > rb.created_at;
    if (ra.post_id != rb.post_id) return ra.post_id < rb.post_id;
    return ra.id < rb.id;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i + 1);
  return out;
}

ConceptDocumentation build_concept_documentation(const ApiRecord& api, const ScenarioRefs& scenarios,
                                                 const ConceptOptions& options) {
  ConceptDocumentation doc;
  std::vector<Itemset> transactions;
  std::vector<std::string> code;
  for (const auto* s : scenarios) {
    transactions.push_back(normalized(s->api_types));
    code.push_back(s->snippet.raw.text);
  }
  doc.itemsets = mine_frequent_itemsets(transactions, static_cast<std::size_t>(std::max(options.min_support, 1)));
  doc.patterns = group_subpatterns(assign_scenarios_to_patterns(transactions, doc.itemsets));
  std::vector<PatternFlow> flows;
  for (auto& p : doc.patterns) {
    p.subgroups = clone_subgroups(p.scenarios, code, options);
    flows.push_back(pattern_flow(p, scenarios, api));
  }
  doc.edges = connect_patterns(flows);
  doc.concepts = build_concepts(doc.patterns, doc.edges, scenarios);
  return doc;
}

}  // namespace scenariodoc
