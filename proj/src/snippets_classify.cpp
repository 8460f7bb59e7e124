#include <algorithm>
#include <array>
#include <regex>

#include "scenariodoc/java_lexer.hpp"
#include "scenariodoc/snippets.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

struct Evidence {
  std::vector<std::string> lines;  // trimmed, non-blank
  std::size_t statement_lines = 0;      // ending in ';', '{' or '}'
  std::size_t semicolon_lines = 0;
  long open_braces = 0;
  long close_braces = 0;
  bool java_keyword = false;
  bool declaration_keyword = false;  // class/import/public/private/void...
  bool call_syntax = false;
  bool typed_declaration = false;    // "Foo foo =" / "String s;"
  bool foreign_markup = false;       // <tag>, function(, { "key":
  std::size_t at_frames = 0;         // "at pkg.Class.method(File.java:12)"
  bool exception_header = false;
  std::size_t closing_tags = 0;
  std::size_t json_keys = 0;
  std::size_t js_markers = 0;
};

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

Evidence gather(std::string_view code) {
  Evidence e;
  const auto all = text::split_lines(code);
  static const std::regex kFrame(R"(^at\s+[\w$.<>/]+\(.*\)\s*$)");
  static const std::regex kExceptionHeader(R"(^([\w$]+\.)+[\w$]*(Exception|Error)(:.*)?$)");
  static const std::regex kClosingTag(R"(</[A-Za-z][\w:.-]*\s*>)");
  static const std::regex kSelfClosingTag(R"(<[A-Za-z][\w:.-]*(\s+[\w:.-]+\s*=\s*("[^"]*"|'[^']*'))*\s*/>)");
  static const std::regex kLowerTag(R"(<[a-z][\w:-]*(\s[^<>]*)?>)");
  static const std::regex kBraceKey(R"(\{\s*"[^"\n]*"\s*:)");
  static const std::regex kJsonKey(R"("[^"\n]*"\s*:)");
  static const std::regex kJsFunction(R"(\bfunction\s*[\w$]*\s*\()");
  static const std::regex kJsMarker(
      R"((\bconsole\.|\bdocument\.|\bwindow\.|\$\(|\$\.|===|!==|\blet\s+\w+\s*=|\bconst\s+\w+\s*=|\brequire\(|\balert\(|\bJSON\.(parse|stringify)\())");
  static const std::regex kTypedDecl(R"(\b[A-Z][\w$]*(<[^;=()]*>)?(\[\])*\s+[a-z_$][\w$]*\s*(=|;|,|:|\)))");
  static const std::regex kPrimitiveDecl(R"(\b(int|long|double|float|boolean|char|byte|short)(\[\])*\s+[a-z_$][\w$]*\s*(=|;|,))");

  for (const auto& raw : all) {
    const auto line = text::trim(raw);
    if (line.empty()) continue;
    e.lines.emplace_back(line);
    const char last = line.back();
    if (last == ';' || last == '{' || last == '}') ++e.statement_lines;
    if (last == ';') ++e.semicolon_lines;
    const std::string s(line);
    if (std::regex_search(s, kFrame)) ++e.at_frames;
    if (starts_with(line, "Caused by:") || starts_with(line, "Exception in thread") ||
        std::regex_search(s, kExceptionHeader)) {
      e.exception_header = true;
    }
  }
  for (char c : code) {
    if (c == '{') ++e.open_braces;
    if (c == '}') ++e.close_braces;
  }
  const std::string s(code);
  e.closing_tags = static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), kClosingTag), std::sregex_iterator())) +
                   static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), kSelfClosingTag), std::sregex_iterator()));
  e.json_keys = static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), kJsonKey), std::sregex_iterator()));
  const bool js_function = std::regex_search(s, kJsFunction);
  e.js_markers = static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), kJsMarker), std::sregex_iterator())) +
                 (js_function ? 2 : 0);
  e.typed_declaration = std::regex_search(s, kTypedDecl) || std::regex_search(s, kPrimitiveDecl);
  e.foreign_markup = std::regex_search(s, kLowerTag) || js_function ||
                     std::regex_search(s, kBraceKey);

  static constexpr std::array<std::string_view, 12> kDeclKeywords{
      "class", "import", "void", "public", "private", "protected", "static", "extends", "implements", "throws", "interface", "package"};
  static constexpr std::array<std::string_view, 10> kBodyKeywords{
      "new", "return", "final", "try", "catch", "null", "this", "instanceof", "throw", "boolean"};
  const auto lexed = java::lex(code);
  const auto& toks = lexed.tokens;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const auto& t = toks[i];
    if (!t.ident()) continue;
    if (std::find(kDeclKeywords.begin(), kDeclKeywords.end(), t.text) != kDeclKeywords.end()) {
      e.java_keyword = e.declaration_keyword = true;
    } else if (std::find(kBodyKeywords.begin(), kBodyKeywords.end(), t.text) != kBodyKeywords.end()) {
      e.java_keyword = true;
    }
    if (i + 1 < toks.size() && toks[i + 1].is("(") && !java::is_keyword(t.text) && t.text != "function") {
      const bool after_dot = i > 0 && toks[i - 1].is(".");
      const bool camel = text::is_lower(t.text[0]) &&
                         std::any_of(t.text.begin(), t.text.end(), [](char c) { return text::is_upper(c); });
      const bool ctor = i > 0 && toks[i - 1].ident() && toks[i - 1].text == "new";
      if (after_dot || camel || ctor) e.call_syntax = true;
    }
  }
  return e;
}

double java_score(const Evidence& e) {
  if (e.lines.empty()) return 0.0;
  double score = 0.0;
  score += 0.3 * static_cast<double>(e.statement_lines) / static_cast<double>(e.lines.size());
  if (e.open_braces == e.close_braces && (e.open_braces > 0 || e.semicolon_lines > 0)) score += 0.1;
  if (e.java_keyword || e.typed_declaration) score += 0.3;
  if (e.call_syntax) score += 0.2;
  if (!e.foreign_markup) score += 0.1;
  return score;
}

}  // namespace

std::string_view to_string(SnippetKind k) {
  switch (k) {
    case SnippetKind::kValidJava: return "valid-java";
    case SnippetKind::kXml: return "xml";
    case SnippetKind::kJson: return "json";
    case SnippetKind::kJavascript: return "javascript";
    case SnippetKind::kStacktrace: return "stacktrace";
    case SnippetKind::kProse: return "prose";
    case SnippetKind::kTooShort: return "too-short";
  }
  return "prose";
}

std::optional<SnippetKind> snippet_kind_from_string(std::string_view s) {
  for (auto k : {SnippetKind::kValidJava, SnippetKind::kXml, SnippetKind::kJson, SnippetKind::kJavascript,
                 SnippetKind::kStacktrace, SnippetKind::kProse, SnippetKind::kTooShort}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

Validity classify_snippet(std::string_view code, const ClassifierOptions& options) {
  const Evidence e = gather(code);
  const double score = java_score(e);
  if (e.lines.empty()) return {SnippetKind::kTooShort, 0.0};

  const std::string_view first = e.lines.front();
  const bool starts_with_tag = !first.empty() && first.front() == '<';

  if (e.at_frames >= 2 || (e.at_frames >= 1 && e.exception_header) ||
      starts_with(first, "Exception in thread")) {
    return {SnippetKind::kStacktrace, score};
  }
  if (starts_with_tag && (starts_with(first, "<?xml") || starts_with(first, "<!") || e.closing_tags >= 1)) {
    return {SnippetKind::kXml, score};
  }
  if ((first.front() == '{' || first.front() == '[') && e.semicolon_lines == 0 && !e.declaration_keyword &&
      (e.json_keys >= 1 || first.front() == '[')) {
    return {SnippetKind::kJson, score};
  }
  if (e.js_markers >= 2 || (e.js_markers >= 1 && !e.typed_declaration && !e.declaration_keyword)) {
    return {SnippetKind::kJavascript, score};
  }

  const bool has_structure = e.statement_lines > 0;
  if (static_cast<int>(e.lines.size()) < options.min_lines) {
    // A lone line may still be a complete Java statement ("Gson gson = new Gson();").
    const bool statement = first.back() == ';' || first.back() == '{' || first.back() == '}';
    if (e.lines.size() > 1 || !statement || score < options.java_threshold) return {SnippetKind::kTooShort, score};
  }
  if (has_structure && score >= options.java_threshold) return {SnippetKind::kValidJava, score};

  if (e.closing_tags >= 2) return {SnippetKind::kXml, score};
  if (e.json_keys >= 2 && e.semicolon_lines == 0) return {SnippetKind::kJson, score};
  if (e.at_frames >= 1 || e.exception_header) return {SnippetKind::kStacktrace, score};
  return {SnippetKind::kProse, score};
}

}  // namespace scenariodoc
