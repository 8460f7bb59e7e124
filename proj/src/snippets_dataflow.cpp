#include <algorithm>
#include <map>

#include "scenariodoc/java_lexer.hpp"
#include "scenariodoc/snippets.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

using java::Token;

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct Call {
  CallSite site;
  std::size_t name = 0;   // token index of the method name (or type for constructors)
  std::size_t start = 0;  // first token of the call expression including its receiver chain
  std::size_t open = 0;
  std::size_t close = 0;
  std::string result_type;
  std::size_t receiver_of = npos;  // index into calls of the call using this result as receiver
};

class FlowBuilder {
 public:
  FlowBuilder(std::vector<Token> toks, const CodeSnippet& snippet)
      : t_(std::move(toks)), snippet_(snippet) {}

  DataflowFacts run() {
    match_parens();
    find_calls();
    assign_result_types();
    link_receivers();
    track_variables();
    return collect();
  }

 private:
  bool at(std::size_t i, std::string_view p) const { return i < t_.size() && t_[i].is(p); }
  bool ident_at(std::size_t i) const { return i < t_.size() && t_[i].ident(); }

  void match_parens() {
    match_.assign(t_.size(), npos);
    std::vector<std::size_t> parens;
    std::vector<std::size_t> braces;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      auto& stack = t_[i].is("(") || t_[i].is(")") ? parens : braces;
      if (t_[i].is("(") || t_[i].is("{")) {
        stack.push_back(i);
      } else if ((t_[i].is(")") || t_[i].is("}")) && !stack.empty()) {
        match_[stack.back()] = i;
        match_[i] = stack.back();
        stack.pop_back();
      }
    }
  }

  // Call whose expression ends at token k: "f(..)" or an anonymous class "new T() {..}".
  std::size_t call_ending_at(std::size_t k) const {
    if (at(k, "}") && match_[k] != npos && match_[k] > 0) k = match_[k] - 1;
    if (!at(k, ")")) return npos;
    const auto it = by_close_.find(k);
    return it == by_close_.end() ? npos : it->second;
  }

  std::string var_type(const std::string& name) const {
    const auto it = snippet_.variables.find(name);
    return it == snippet_.variables.end() ? std::string{} : it->second;
  }

  // Walks the receiver chain backwards from the token before `from`.
  std::size_t chain_start(std::size_t from) const {
    std::size_t i = from;
    while (true) {
      if (i > 0 && t_[i - 1].ident() && t_[i - 1].text == "new") return i - 1;
      if (i < 2 || !t_[i - 1].is(".")) return i;
      std::size_t k = i - 2;
      if (t_[k].ident()) {
        i = k;
        continue;
      }
      if (const auto c = call_ending_at(k); c != npos) {
        i = calls_[c].start;
        continue;
      }
      if (t_[k].is(")") && match_[k] != npos && match_[k] > 0 && t_[match_[k] - 1].ident()) {
        i = match_[k] - 1;
        continue;
      }
      return i;
    }
  }

  void find_calls() {
    for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
      if (!t_[i].ident()) continue;
      if (t_[i].text == "new" && ident_at(i + 1)) {
        std::size_t k = i + 1;
        while (at(k + 1, ".") && ident_at(k + 2)) k += 2;
        const std::string type = t_[k].text;
        std::size_t open = k + 1;
        if (at(open, "<")) {
          int depth = 0;
          for (; open < t_.size(); ++open) {
            if (t_[open].is("<")) ++depth;
            else if (t_[open].is(">")) --depth;
            else if (t_[open].is(">>>")) depth -= 3;
            if (depth <= 0) break;
          }
          ++open;
        }
        if (!at(open, "(") || match_[open] == npos) continue;
        Call c;
        c.site.receiver_type = type;
        c.site.method = "<init>";
        c.site.line = t_[i].line;
        c.name = k;
        c.start = i;
        c.open = open;
        c.close = match_[open];
        c.result_type = type;
        calls_.push_back(std::move(c));
        continue;
      }
      if (!at(i + 1, "(") || match_[i + 1] == npos || java::is_keyword(t_[i].text)) continue;
      if (!(i > 0 && t_[i - 1].is(".")) && !unqualified_call(i)) continue;
      Call c;
      c.site.method = t_[i].text;
      c.site.line = t_[i].line;
      c.name = i;
      c.start = i;
      c.open = i + 1;
      c.close = match_[i + 1];
      calls_.push_back(std::move(c));
    }
    // receiver chains can end in earlier calls, so starts are resolved once every call is known
    for (std::size_t k = 0; k < calls_.size(); ++k) by_close_[calls_[k].close] = k;
    for (std::size_t pass = 0; pass < calls_.size(); ++pass) {
      bool changed = false;
      for (auto& c : calls_) {
        if (c.site.method == "<init>") continue;
        const auto s = chain_start(c.name);
        if (s != c.start) {
          c.start = s;
          changed = true;
        }
      }
      if (!changed) break;
    }
    by_close_.clear();
    // constructors are found at "new", method calls at their name; order by name token
    std::stable_sort(calls_.begin(), calls_.end(), [](const Call& a, const Call& b) { return a.start < b.start || (a.start == b.start && a.name < b.name); });
    for (std::size_t k = 0; k < calls_.size(); ++k) {
      calls_[k].site.id = static_cast<int>(k);
      by_close_[calls_[k].close] = k;
    }
  }

  // "send(x)" as a statement or argument, not a declaration like "void send(".
  bool unqualified_call(std::size_t i) const {
    if (i == 0) return true;
    const auto& prev = t_[i - 1];
    if (prev.ident()) {
      return prev.text == "return" || prev.text == "throw" || prev.text == "else" || prev.text == "case" ||
             prev.text == "assert";
    }
    return !(prev.is(">") || prev.is(">>") || prev.is(">>>") || prev.is("]") || prev.is("@") || prev.is("."));
  }

  // Outermost call exactly spanning [s, e); leading casts are skipped.
  std::size_t root_call(std::size_t s, std::size_t e) const {
    while (at(s, "(") && match_[s] != npos && match_[s] + 1 < e && match_[s] == s + 2 && ident_at(s + 1)) {
      s = match_[s] + 1;
    }
    if (e == 0 || s >= e) return npos;
    const auto it = by_close_.find(e - 1);
    if (it == by_close_.end()) return npos;
    return calls_[it->second].start == s ? it->second : npos;
  }

  // End of the expression starting at s: next depth-0 ';' ',' ')' or '}'.
  std::size_t expression_end(std::size_t s) const {
    int depth = 0;
    for (std::size_t i = s; i < t_.size(); ++i) {
      const auto& tk = t_[i];
      if (tk.is("(") || tk.is("[") || tk.is("{")) {
        ++depth;
      } else if (tk.is(")") || tk.is("]") || tk.is("}")) {
        if (depth == 0) return i;
        --depth;
      } else if (depth == 0 && (tk.is(";") || tk.is(","))) {
        return i;
      }
    }
    return t_.size();
  }

  void assign_result_types() {
    // "Type v = call" declarations
    for (std::size_t i = 1; i + 1 < t_.size(); ++i) {
      if (!t_[i].is("=") || !t_[i - 1].ident()) continue;
      const std::string declared = var_type(t_[i - 1].text);
      const std::size_t end = expression_end(i + 1);
      const std::size_t root = root_call(i + 1, end);
      if (root != npos && !declared.empty()) calls_[root].result_type = declared;
      if (root != npos) assignments_.push_back({i - 1, root});
    }
    for (auto& c : calls_) {
      if (!c.result_type.empty()) continue;
      for (std::size_t k = c.open + 1; k + 2 < c.close; ++k) {
        if (t_[k].ident() && at(k + 1, ".") && ident_at(k + 2) && t_[k + 2].text == "class" &&
            !(k > 0 && t_[k - 1].is("."))) {
          c.result_type = t_[k].text;
        }
      }
    }
  }

  void link_receivers() {
    for (auto& c : calls_) {
      if (c.site.method == "<init>") continue;
      if (c.name < 2 || !t_[c.name - 1].is(".")) continue;
      const std::size_t r = c.name - 2;
      if (t_[r].is(")") || t_[r].is("}")) {
        if (const auto k = call_ending_at(r); k != npos) {
          c.site.receiver_type = calls_[k].result_type;
          calls_[k].receiver_of = static_cast<std::size_t>(c.site.id);
        }
      } else if (t_[r].ident()) {
        const bool dotted = r > 0 && t_[r - 1].is(".");
        std::string type = var_type(t_[r].text);
        if (type.empty() && !dotted && !t_[r].text.empty() && text::is_upper(t_[r].text[0])) type = t_[r].text;
        if (type.empty() && dotted && text::is_upper(t_[r].text[0])) type = t_[r].text;  // a.b.Foo.m()
        c.site.receiver_type = type;
      }
    }
  }

  // Innermost call whose argument list strictly contains [s, e].
  std::size_t enclosing_call(std::size_t s, std::size_t e) const {
    std::size_t best = npos;
    for (std::size_t k = 0; k < calls_.size(); ++k) {
      const auto& c = calls_[k];
      if (c.open < s && e < c.close && (best == npos || c.open > calls_[best].open)) best = k;
    }
    return best;
  }

  void track_variables() {
    // assignments sorted by token position; a use refers to the latest assignment before it
    std::sort(assignments_.begin(), assignments_.end());
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (!t_[i].ident() || (i > 0 && t_[i - 1].is("."))) continue;
      if (at(i + 1, "(") || at(i + 1, "=")) continue;
      const Assignment* latest = nullptr;
      for (const auto& a : assignments_) {
        if (a.var_token < i && t_[a.var_token].text == t_[i].text && calls_[a.call].close < i) latest = &a;
      }
      if (latest == nullptr) continue;
      const std::size_t producer = latest->call;
      if (at(i + 1, ".") && ident_at(i + 2) && at(i + 3, "(")) {
        if (const auto it = by_name_index(i + 2); it != npos) var_uses_.push_back({producer, it, i});
        continue;
      }
      if (const auto consumer = enclosing_call(i, i); consumer != npos) var_uses_.push_back({producer, consumer, i});
    }
  }

  std::size_t by_name_index(std::size_t name) const {
    for (std::size_t k = 0; k < calls_.size(); ++k) {
      if (calls_[k].name == name && calls_[k].site.method != "<init>") return k;
    }
    return npos;
  }

  std::vector<std::pair<std::size_t, std::size_t>> arguments(const Call& c) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t s = c.open + 1;
    if (s >= c.close) return out;
    while (s < c.close) {
      const std::size_t e = std::min(expression_end(s), c.close);
      out.emplace_back(s, e);
      s = e + 1;
    }
    return out;
  }

  DataflowFacts collect() {
    DataflowFacts facts;
    std::vector<bool> consumed(calls_.size(), false);
    for (std::size_t k = 0; k < calls_.size(); ++k) {
      const auto& c = calls_[k];
      if (c.receiver_of != npos) {
        consumed[k] = true;
        facts.internal.push_back(FlowEdge{c.result_type, c.site, calls_[c.receiver_of].site});
      }
    }
    for (const auto& c : calls_) {
      for (const auto& [s, e] : arguments(c)) {
        FlowInput in;
        in.consumer = c.site;
        if (e == s + 1 && t_[s].ident()) {
          in.type = var_type(t_[s].text);
          for (const auto& u : var_uses_) {
            if (u.token == s) {
              in.producer = calls_[u.producer].site;
              if (in.type.empty()) in.type = calls_[u.producer].result_type;
            }
          }
        } else if (e == s + 1 && t_[s].kind == java::TokenKind::kString) {
          in.type = "String";
        } else if (e == s + 3 && t_[s].ident() && at(s + 1, ".") && t_[s + 2].text == "class") {
          in.type = "Class";
        } else if (const auto root = root_call(s, e); root != npos) {
          in.producer = calls_[root].site;
          in.type = calls_[root].result_type;
        }
        facts.inputs.push_back(std::move(in));
      }
    }
    for (std::size_t k = 0; k < calls_.size(); ++k) {
      if (consumed[k]) continue;
      const auto& c = calls_[k];
      const auto consumer = enclosing_call(c.start, c.close);
      if (consumer != npos) {
        consumed[k] = true;
        facts.internal.push_back(FlowEdge{c.result_type, c.site, calls_[consumer].site});
      }
    }
    for (const auto& u : var_uses_) {
      consumed[u.producer] = true;
      facts.internal.push_back(FlowEdge{calls_[u.producer].result_type, calls_[u.producer].site,
                                        calls_[u.consumer].site});
    }
    for (std::size_t k = 0; k < calls_.size(); ++k) {
      if (!consumed[k]) facts.outputs.push_back(FlowOutput{calls_[k].result_type, calls_[k].site});
    }
    std::sort(facts.inputs.begin(), facts.inputs.end());
    std::sort(facts.internal.begin(), facts.internal.end());
    facts.internal.erase(std::unique(facts.internal.begin(), facts.internal.end()), facts.internal.end());
    std::sort(facts.outputs.begin(), facts.outputs.end());
    return facts;
  }

  struct Assignment {
    std::size_t var_token;
    std::size_t call;
    friend auto operator<=>(const Assignment&, const Assignment&) = default;
  };
  struct VarUse {
    std::size_t producer;
    std::size_t consumer;
    std::size_t token;
  };

  std::vector<Token> t_;
  const CodeSnippet& snippet_;
  std::vector<std::size_t> match_;
  std::vector<Call> calls_;
  std::map<std::size_t, std::size_t> by_close_;
  std::vector<Assignment> assignments_;
  std::vector<VarUse> var_uses_;
};

}  // namespace

DataflowFacts compute_dataflow(const CodeSnippet& snippet) {
  auto toks = java::without_comments(java::lex(snippet.raw.text).tokens);
  return FlowBuilder(std::move(toks), snippet).run();
}

std::vector<std::string> normalized_lines(std::string_view code) {
  const auto toks = java::without_comments(java::lex(code).tokens);
  std::vector<std::string> out;
  int current = -1;
  for (const auto& tk : toks) {
    if (tk.line != current) {
      out.emplace_back();
      current = tk.line;
    } else {
      out.back() += ' ';
    }
    out.back() += tk.literal() ? std::string("<LIT>") : tk.text;
  }
  return out;
}

}  // namespace scenariodoc
