#include "scenariodoc/java_lexer.hpp"

#include <algorithm>
#include <array>

#include "scenariodoc/text.hpp"

namespace scenariodoc::java {
namespace {

constexpr std::array<std::string_view, 14> kThreeCharOps{
    ">>>", "<<=", ">>=", "...", "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++", "--"};

constexpr std::array<std::string_view, 8> kTwoCharAssign{"+=", "-=", "*=", "/=", "%=", "&=", "|=", "^="};

}  // namespace

bool is_keyword(std::string_view s) {
  static constexpr std::array<std::string_view, 53> kKeywords{
      "abstract", "assert",     "boolean",   "break",     "byte",      "case",     "catch",
      "char",     "class",      "const",     "continue",  "default",   "do",       "double",
      "else",     "enum",       "extends",   "final",     "finally",   "float",    "for",
      "goto",     "if",         "implements", "import",   "instanceof", "int",     "interface",
      "long",     "native",     "new",       "package",   "private",   "protected", "public",
      "return",   "short",      "static",    "strictfp",  "super",     "switch",   "synchronized",
      "this",     "throw",      "throws",    "transient", "try",       "void",     "volatile",
      "while",    "true",       "false",     "null"};
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

LexResult lex(std::string_view src) {
  LexResult out;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto push = [&](TokenKind k, std::size_t from, std::size_t to, int at_line) {
    out.tokens.push_back(Token{k, std::string(src.substr(from, to - from)), at_line});
  };
  while (i < n) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (text::is_space(c)) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      const auto end = src.find('\n', i);
      const std::size_t stop = end == std::string_view::npos ? n : end;
      push(TokenKind::kComment, i, stop, line);
      i = stop;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const auto end = src.find("*/", i + 2);
      const std::size_t stop = end == std::string_view::npos ? n : end + 2;
      if (end == std::string_view::npos) out.ok = false;
      const int start_line = line;
      line += static_cast<int>(std::count(src.begin() + i, src.begin() + stop, '\n'));
      push(TokenKind::kComment, i, stop, start_line);
      i = stop;
      continue;
    }
    if (text::is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < n && text::is_ident_char(src[j])) ++j;
      push(TokenKind::kIdentifier, i, j, line);
      i = j;
      continue;
    }
    if ((c >= '0' && c <= '9') || (c == '.' && i + 1 < n && src[i + 1] >= '0' && src[i + 1] <= '9')) {
      std::size_t j = i + 1;
      while (j < n && (text::is_ident_char(src[j]) || src[j] == '.' ||
                       ((src[j] == '+' || src[j] == '-') && (src[j - 1] == 'e' || src[j - 1] == 'E')))) {
        ++j;
      }
      push(TokenKind::kNumber, i, j, line);
      i = j;
      continue;
    }
    if (c == '"' || c == '\'') {
      // Text blocks ("""...""") are treated as one string literal.
      if (c == '"' && src.substr(i, 3) == "\"\"\"") {
        const auto end = src.find("\"\"\"", i + 3);
        const std::size_t stop = end == std::string_view::npos ? n : end + 3;
        if (end == std::string_view::npos) out.ok = false;
        const int start_line = line;
        line += static_cast<int>(std::count(src.begin() + i, src.begin() + stop, '\n'));
        push(TokenKind::kString, i, stop, start_line);
        i = stop;
        continue;
      }
      std::size_t j = i + 1;
      bool closed = false;
      while (j < n && src[j] != '\n') {
        if (src[j] == '\\') {
          j += 2;
          continue;
        }
        if (src[j] == c) {
          closed = true;
          ++j;
          break;
        }
        ++j;
      }
      j = std::min(j, n);
      if (!closed) out.ok = false;
      push(c == '"' ? TokenKind::kString : TokenKind::kChar, i, j, line);
      i = j;
      continue;
    }
    std::size_t len = 1;
    for (auto op : kThreeCharOps) {
      if (src.substr(i, op.size()) == op) {
        len = op.size();
        break;
      }
    }
    if (len == 1) {
      for (auto op : kTwoCharAssign) {
        if (src.substr(i, 2) == op) {
          len = 2;
          break;
        }
      }
    }
    push(TokenKind::kPunct, i, i + len, line);
    i += len;
  }
  return out;
}

std::vector<Token> without_comments(std::vector<Token> tokens) {
  std::erase_if(tokens, [](const Token& t) { return t.kind == TokenKind::kComment; });
  return tokens;
}

}  // namespace scenariodoc::java
