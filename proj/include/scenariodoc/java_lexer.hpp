#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scenariodoc::java {

enum class TokenKind { kIdentifier, kNumber, kString, kChar, kPunct, kComment };

struct Token {
  TokenKind kind;
  std::string text;
  int line;  // 1-based

  bool is(std::string_view punct) const { return kind == TokenKind::kPunct && text == punct; }
  bool ident() const { return kind == TokenKind::kIdentifier; }
  bool literal() const {
    return kind == TokenKind::kNumber || kind == TokenKind::kString || kind == TokenKind::kChar;
  }
};

struct LexResult {
  std::vector<Token> tokens;  // comments included; callers filter as needed
  bool ok = true;             // false on an unterminated string/char/comment
};

// Tolerant tokenizer for Java-like fragments. Never throws.
LexResult lex(std::string_view source);

std::vector<Token> without_comments(std::vector<Token> tokens);

bool is_keyword(std::string_view ident);

}  // namespace scenariodoc::java
