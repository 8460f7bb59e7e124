#include <algorithm>
#include <array>

#include "scenariodoc/java_lexer.hpp"
#include "scenariodoc/snippets.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

using java::Token;

constexpr std::array<std::string_view, 9> kPrimitives{"int", "long", "double", "float", "boolean",
                                                      "char", "byte", "short", "void"};

bool is_primitive(std::string_view s) {
  return std::find(kPrimitives.begin(), kPrimitives.end(), s) != kPrimitives.end();
}

bool all_caps_constant(std::string_view s) {
  bool has_lower = std::any_of(s.begin(), s.end(), [](char c) { return text::is_lower(c); });
  return !has_lower && s.size() > 1 && s.find('_') != std::string_view::npos;
}

bool capitalized(std::string_view s) { return !s.empty() && text::is_upper(s[0]); }

int line_count_of(std::string_view code) {
  int n = 0;
  for (const auto& l : text::split_lines(code)) {
    if (!text::trim(l).empty()) ++n;
  }
  return std::max(n, 1);
}

class ElementParser {
 public:
  ElementParser(const std::vector<Token>& toks, CodeSnippet& out) : t_(toks), out_(out) {}

  void run() {
    first_pass();
    second_pass();
    for (const auto& local : out_.local_decls) out_.types_used.erase(local);
    for (const auto& p : type_params_) out_.types_used.erase(p);
  }

 private:
  bool at(std::size_t i, std::string_view punct) const { return i < t_.size() && t_[i].is(punct); }
  bool ident_at(std::size_t i) const { return i < t_.size() && t_[i].ident(); }
  bool prev_is_dot(std::size_t i) const { return i > 0 && t_[i - 1].is("."); }

  // Index just past a balanced <...> starting at i, or i when it is not a
  // generic argument list.
  std::size_t skip_generics(std::size_t i) const {
    if (!at(i, "<")) return i;
    int depth = 0;
    for (std::size_t j = i; j < t_.size(); ++j) {
      const auto& tok = t_[j];
      if (tok.is("<")) ++depth;
      else if (tok.is(">")) --depth;
      else if (tok.is(">>>")) depth -= 3;
      else if (tok.is(">>=") || tok.is(">=")) return i;
      else if (tok.kind == java::TokenKind::kPunct && !tok.is(",") && !tok.is(".") && !tok.is("?") &&
               !tok.is("[") && !tok.is("]") && !tok.is("&")) {
        return i;
      } else if (tok.literal()) {
        return i;
      }
      if (depth <= 0) return depth == 0 ? j + 1 : i;
    }
    return i;
  }

  std::size_t skip_dims(std::size_t i) const {
    while (at(i, "[") && at(i + 1, "]")) i += 2;
    if (at(i, "...")) ++i;
    return i;
  }

  // Dotted identifier chain starting at i; returns one past its end.
  std::size_t chain_end(std::size_t i) const {
    std::size_t j = i + 1;
    while (at(j, ".") && ident_at(j + 1)) j += 2;
    return j;
  }

  bool type_candidate(const std::string& s) const {
    return capitalized(s) && !java::is_keyword(s) && !all_caps_constant(s) && s.size() > 1 &&
           !type_params_.contains(s);
  }

  void add_type(const std::string& s) {
    if (type_candidate(s) && !out_.variables.contains(s)) out_.types_used.insert(s);
  }

  // Adds every type named inside a generic argument list [from, to).
  void add_generic_args(std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) {
      if (!t_[k].ident() || prev_is_dot(k)) continue;
      const std::size_t end = chain_end(k);
      add_qualified(k, end);
      k = end - 1;
    }
  }

  // Handles "a.b.C" (qualified) and "C" forms; returns the simple type name.
  std::string add_qualified(std::size_t from, std::size_t to) {
    std::string fqn;
    std::string simple;
    for (std::size_t k = from; k < to; k += 2) {
      const auto& seg = t_[k].text;
      if (capitalized(seg)) {
        simple = seg;
        if (!fqn.empty()) out_.qualified_types[seg] = fqn + "." + seg;
        break;
      }
      if (!fqn.empty()) fqn += '.';
      fqn += seg;
    }
    if (!simple.empty()) add_type(simple);
    return simple;
  }

  // Declarations "Type name" (Type may be primitive, qualified, generic or an array).
  void first_pass() {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const auto& tok = t_[i];
      if (!tok.ident() || prev_is_dot(i)) continue;
      if (tok.text == "class" || tok.text == "interface" || tok.text == "enum" || tok.text == "record") {
        if (i > 0 && t_[i - 1].is("@") && tok.text == "interface") {
          if (ident_at(i + 1)) out_.local_decls.insert(t_[i + 1].text);
          continue;
        }
        if (ident_at(i + 1)) {
          out_.local_decls.insert(t_[i + 1].text);
          collect_type_params(i + 2);
        }
        continue;
      }
      if (java::is_keyword(tok.text) && !is_primitive(tok.text)) continue;
      if (tok.text == "import" || tok.text == "package") continue;
      const std::size_t type_end = chain_end(i);
      std::size_t j = skip_dims(skip_generics(type_end));
      if (!ident_at(j) || java::is_keyword(t_[j].text)) continue;
      if (!(at(j + 1, "=") || at(j + 1, ";") || at(j + 1, ",") || at(j + 1, ")") || at(j + 1, ":") ||
            at(j + 1, "["))) {
        continue;
      }
      const std::string type = t_[type_end - 1].text;
      if (type == "var") {
        if (at(j + 1, "=") && ident_at(j + 2) && t_[j + 2].text == "new" && ident_at(j + 3)) {
          out_.variables[t_[j].text] = t_[chain_end(j + 3) - 1].text;
        } else {
          out_.variables[t_[j].text] = "";
        }
      } else {
        out_.variables[t_[j].text] = type;
      }
    }
    // "<T> T parse(...)": method-level type parameters
    for (std::size_t i = 0; i + 2 < t_.size(); ++i) {
      if (t_[i].ident() && (t_[i].text == "public" || t_[i].text == "private" || t_[i].text == "protected" ||
                            t_[i].text == "static") &&
          at(i + 1, "<")) {
        collect_type_params(i + 1);
      }
    }
  }

  void collect_type_params(std::size_t i) {
    if (!at(i, "<")) return;
    const std::size_t end = skip_generics(i);
    if (end == i) return;
    bool expect_name = true;
    for (std::size_t k = i + 1; k + 1 < end; ++k) {
      if (t_[k].is(",")) {
        expect_name = true;
      } else if (expect_name && t_[k].ident()) {
        type_params_.insert(t_[k].text);
        expect_name = false;
      }
    }
  }

  std::string receiver_type_before_dot(std::size_t dot) const {
    if (dot == 0) return {};
    std::size_t r = dot - 1;
    const auto& tok = t_[r];
    if (tok.ident()) {
      if (tok.text == "this" || tok.text == "super") return {};
      if (const auto v = out_.variables.find(tok.text); v != out_.variables.end()) return v->second;
      if (capitalized(tok.text) && !all_caps_constant(tok.text) && !prev_is_dot(r)) return tok.text;
      return {};
    }
    // "new Foo<...>(...){...}.m()" and "new Foo(...).m()"
    std::size_t k = r;
    if (t_[k].is("}")) {
      k = match_back(k, "{", "}");
      if (k == npos || k == 0) return {};
      --k;
    }
    if (!t_[k].is(")")) return {};
    k = match_back(k, "(", ")");
    if (k == npos || k == 0) return {};
    --k;
    if (t_[k].is(">")) {
      int depth = 0;
      while (true) {
        if (t_[k].is(">")) ++depth;
        else if (t_[k].is("<")) --depth;
        if (depth == 0 || k == 0) break;
        --k;
      }
      if (k == 0) return {};
      --k;
    }
    if (!t_[k].ident()) return {};
    std::size_t start = k;
    while (start >= 2 && t_[start - 1].is(".") && t_[start - 2].ident()) start -= 2;
    if (start > 0 && t_[start - 1].ident() && t_[start - 1].text == "new") return t_[k].text;
    return {};
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t match_back(std::size_t close, std::string_view open_p, std::string_view close_p) const {
    int depth = 0;
    for (std::size_t k = close + 1; k-- > 0;) {
      if (t_[k].is(close_p)) ++depth;
      else if (t_[k].is(open_p) && --depth == 0) return k;
    }
    return npos;
  }

  void second_pass() {
    enum class ListMode { kNone, kTypes } mode = ListMode::kNone;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const auto& tok = t_[i];
      if (tok.is("{") || tok.is(";")) mode = ListMode::kNone;
      if (!tok.ident()) continue;
      const auto& s = tok.text;

      if ((s == "import" || s == "package") && !prev_is_dot(i)) {
        std::size_t k = i + 1;
        if (s == "import" && ident_at(k) && t_[k].text == "static") ++k;
        std::string name;
        while (k < t_.size() && !t_[k].is(";")) {
          if (t_[k].kind == java::TokenKind::kIdentifier || t_[k].is(".") || t_[k].is("*")) name += t_[k].text;
          else break;
          ++k;
        }
        if (s == "import" && !name.empty()) {
          out_.imports.push_back(name);
          // "import a.b.C;" declares C as a type in use
          const auto dot = name.rfind('.');
          const auto simple = name.substr(dot + 1);
          if (capitalized(simple)) out_.qualified_types[simple] = name;
        }
        i = k;
        continue;
      }
      if (s == "extends" || s == "implements" || s == "throws") {
        mode = ListMode::kTypes;
        continue;
      }
      if ((s == "class" || s == "interface" || s == "enum" || s == "record") && !prev_is_dot(i)) {
        ++i;  // declared name
        continue;
      }
      if (i > 0 && t_[i - 1].is("@") && s != "interface") {
        const std::size_t end = chain_end(i);
        add_qualified(i, end);
        i = end - 1;
        continue;
      }
      if (s == "new" || s == "instanceof") {
        if (ident_at(i + 1)) {
          const std::size_t end = chain_end(i + 1);
          add_qualified(i + 1, end);
          const std::size_t g = skip_generics(end);
          if (g != end) add_generic_args(end, g);
          i = end - 1;
        }
        continue;
      }
      if (prev_is_dot(i)) {
        if (at(i + 1, "(")) record_call(i);
        continue;
      }
      if (java::is_keyword(s)) continue;

      const std::size_t end = chain_end(i);
      const bool qualified = end > i + 1;
      // Lower-case package chain ending in a type: com.google.gson.Gson
      if (qualified && !capitalized(s) && !out_.variables.contains(s)) {
        std::size_t k = i;
        std::size_t lower_segments = 0;
        while (k < end && !capitalized(t_[k].text)) {
          ++lower_segments;
          k += 2;
        }
        if (k < end && lower_segments >= 2) {
          add_qualified(i, end);
          const std::size_t g = skip_generics(end);
          if (g != end) add_generic_args(end, g);
          // calls inside the chain
          for (std::size_t m = k + 2; m < end; m += 2) {
            if (at(m + 1, "(")) record_call(m);
          }
          i = end - 1;
          continue;
        }
      }
      if (at(i + 1, "(")) {
        // unqualified call unless it is a declaration "Type name(" / "void name("
        const bool decl = i > 0 && (t_[i - 1].is(">") || t_[i - 1].is("]") ||
                                    (t_[i - 1].ident() && (!java::is_keyword(t_[i - 1].text) ||
                                                           is_primitive(t_[i - 1].text))));
        if (!decl && !capitalized(s)) out_.methods_called.push_back(MethodCall{"", s, tok.line});
        continue;
      }
      if (!type_candidate(s) || out_.variables.contains(s)) continue;

      if (qualified) {
        add_type(s);  // static receiver or Foo.class
        continue;
      }
      const std::size_t g = skip_generics(i + 1);
      const std::size_t after = skip_dims(g);
      const bool generic = g != i + 1;
      bool is_type = mode == ListMode::kTypes;
      if (ident_at(after) && !java::is_keyword(t_[after].text)) is_type = true;  // declaration
      if (at(after, "::")) is_type = true;
      if (generic) is_type = true;
      if (i > 0 && t_[i - 1].is("(") && at(after, ")") && after + 1 < t_.size()) {
        const auto& nx = t_[after + 1];
        if (nx.ident() || nx.literal() || nx.is("(")) is_type = true;  // cast
      }
      if (i > 0 && t_[i - 1].is("|") && mode == ListMode::kNone) is_type = true;  // multi-catch
      if (at(after, "|")) is_type = true;
      if (is_type) {
        add_type(s);
        if (generic) add_generic_args(i + 1, g);
      }
    }
  }

  void record_call(std::size_t name_index) {
    const std::string receiver = receiver_type_before_dot(name_index - 1);
    out_.methods_called.push_back(MethodCall{receiver, t_[name_index].text, t_[name_index].line});
  }

  const std::vector<Token>& t_;
  CodeSnippet& out_;
  std::set<std::string> type_params_;
};

void heuristic_extract(const std::vector<Token>& toks, CodeSnippet& out) {
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const auto& t = toks[i];
    if (!t.ident()) continue;
    const bool after_dot = i > 0 && toks[i - 1].is(".");
    if ((t.text == "class" || t.text == "interface" || t.text == "enum") && i + 1 < toks.size() &&
        toks[i + 1].ident() && !after_dot) {
      out.local_decls.insert(toks[i + 1].text);
      continue;
    }
    if (after_dot && i + 1 < toks.size() && toks[i + 1].is("(")) {
      std::string receiver;
      if (i >= 2 && toks[i - 2].ident() && capitalized(toks[i - 2].text)) receiver = toks[i - 2].text;
      out.methods_called.push_back(MethodCall{receiver, t.text, t.line});
      continue;
    }
    if (!after_dot && capitalized(t.text) && !java::is_keyword(t.text) && !all_caps_constant(t.text) &&
        t.text.size() > 1) {
      out.types_used.insert(t.text);
    }
  }
  for (const auto& local : out.local_decls) out.types_used.erase(local);
}

bool balanced_parens(const std::vector<Token>& toks) {
  long depth = 0;
  for (const auto& t : toks) {
    if (t.is("(")) ++depth;
    else if (t.is(")") && --depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace

CodeSnippet parse_java_elements(const RawSnippet& raw, const ClassifierOptions& options) {
  CodeSnippet out;
  out.raw = raw;
  out.validity = classify_snippet(raw.text, options);
  out.line_count = line_count_of(raw.text);
  auto lexed = java::lex(raw.text);
  const auto toks = java::without_comments(std::move(lexed.tokens));
  if (!lexed.ok || !balanced_parens(toks)) {
    out.heuristic = true;
    heuristic_extract(toks, out);
    return out;
  }
  ElementParser(toks, out).run();
  return out;
}

}  // namespace scenariodoc
