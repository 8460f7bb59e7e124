#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scenariodoc::text {

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool istarts_with(std::string_view s, std::string_view prefix);

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}
inline bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Lower-cased word tokens: runs of letters, digits and apostrophes.
std::vector<std::string> words(std::string_view s);

// Case-insensitive search for `name` delimited by non-word characters.
// Names may contain dots or spaces ("org.json", "Google Gson"); a trailing
// sentence period after the name still counts as a boundary.
bool mentions(std::string_view haystack, std::string_view name);

std::string decode_html_entities(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

}  // namespace scenariodoc::text
