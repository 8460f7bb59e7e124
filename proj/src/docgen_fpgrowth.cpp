#include <algorithm>
#include <map>
#include <set>

#include "scenariodoc/docgen_concept.hpp"

namespace scenariodoc {
namespace {

// Items are dense ids ranked by global frequency; paths are inserted in
// rank order so shared prefixes share nodes.
class FpTree {
 public:
  explicit FpTree(std::size_t item_count) : head_(item_count, -1), totals_(item_count, 0) {
    nodes_.push_back(Node{-1, 0, -1, -1, {}});
  }

  void insert(const std::vector<int>& path, std::size_t count) {
    int cur = 0;
    for (const int item : path) {
      auto& children = nodes_[cur].children;
      const auto it = children.find(item);
      int child;
      if (it == children.end()) {
        child = static_cast<int>(nodes_.size());
        nodes_.push_back(Node{item, 0, cur, head_[item], {}});
        head_[item] = child;
        nodes_[cur].children.emplace(item, child);
      } else {
        child = it->second;
      }
      nodes_[child].count += count;
      totals_[item] += count;
      cur = child;
    }
  }

  bool empty() const { return nodes_.size() == 1; }
  std::size_t total(int item) const { return totals_[item]; }
  std::size_t item_count() const { return head_.size(); }

  // Prefix paths ending above each node of `item`, with that node's count.
  std::vector<std::pair<std::vector<int>, std::size_t>> prefix_paths(int item) const {
    std::vector<std::pair<std::vector<int>, std::size_t>> out;
    for (int n = head_[item]; n != -1; n = nodes_[n].next) {
      std::vector<int> path;
      for (int p = nodes_[n].parent; p > 0; p = nodes_[p].parent) path.push_back(nodes_[p].item);
      std::reverse(path.begin(), path.end());
      out.emplace_back(std::move(path), nodes_[n].count);
    }
    return out;
  }

 private:
  struct Node {
    int item;
    std::size_t count;
    int parent;
    int next;  // next node holding the same item
    std::map<int, int> children;
  };
  std::vector<Node> nodes_;
  std::vector<int> head_;
  std::vector<std::size_t> totals_;
};

void grow(const FpTree& tree, std::vector<int>& suffix, std::size_t min_support,
          std::vector<std::pair<std::vector<int>, std::size_t>>& out) {
  for (int item = static_cast<int>(tree.item_count()) - 1; item >= 0; --item) {
    const std::size_t support = tree.total(item);
    if (support < min_support) continue;
    suffix.push_back(item);
    out.emplace_back(suffix, support);

    const auto base = tree.prefix_paths(item);
    std::vector<std::size_t> counts(tree.item_count(), 0);
    for (const auto& [path, c] : base) {
      for (const int i : path) counts[i] += c;
    }
    FpTree conditional(tree.item_count());
    for (const auto& [path, c] : base) {
      std::vector<int> kept;
      for (const int i : path) {
        if (counts[i] >= min_support) kept.push_back(i);
      }
      if (!kept.empty()) conditional.insert(kept, c);
    }
    if (!conditional.empty()) grow(conditional, suffix, min_support, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<FrequentItemset> mine_frequent_itemsets(const std::vector<Itemset>& transactions,
                                                    std::size_t min_support) {
  min_support = std::max<std::size_t>(min_support, 1);
  std::vector<std::set<std::string>> txs;
  std::map<std::string, std::size_t> freq;
  for (const auto& t : transactions) {
    std::set<std::string> items(t.begin(), t.end());
    for (const auto& i : items) ++freq[i];
    txs.push_back(std::move(items));
  }
  std::vector<std::string> ranked;
  for (const auto& [item, n] : freq) {
    if (n >= min_support) ranked.push_back(item);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const std::string& a, const std::string& b) { return freq[a] > freq[b]; });
  std::map<std::string, int> rank;
  for (std::size_t i = 0; i < ranked.size(); ++i) rank[ranked[i]] = static_cast<int>(i);

  FpTree tree(ranked.size());
  for (const auto& t : txs) {
    std::vector<int> path;
    for (const auto& i : t) {
      if (const auto it = rank.find(i); it != rank.end()) path.push_back(it->second);
    }
    std::sort(path.begin(), path.end());
    if (!path.empty()) tree.insert(path, 1);
  }

  std::vector<std::pair<std::vector<int>, std::size_t>> raw;
  std::vector<int> suffix;
  grow(tree, suffix, min_support, raw);

  std::vector<FrequentItemset> out;
  out.reserve(raw.size());
  for (const auto& [ids, support] : raw) {
    FrequentItemset f;
    for (const int i : ids) f.items.push_back(ranked[i]);
    std::sort(f.items.begin(), f.items.end());
    f.support = support;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const FrequentItemset& a, const FrequentItemset& b) {
    if (a.support != b.support) return a.support > b.support;
    return a.items < b.items;
  });
  return out;
}

}  // namespace scenariodoc
