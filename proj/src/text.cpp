#include "scenariodoc/text.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>

namespace scenariodoc::text {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && istarts_with(a, b);
}

bool istarts_with(std::string_view s, std::string_view prefix) {
  if (prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char x = s[i], y = prefix[i];
    if (is_upper(x)) x = static_cast<char>(x - 'A' + 'a');
    if (is_upper(y)) y = static_cast<char>(y - 'A' + 'a');
    if (x != y) return false;
  }
  return true;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    while (!cur.empty() && cur.back() == '\'') cur.pop_back();
    while (!cur.empty() && cur.front() == '\'') cur.erase(cur.begin());
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : s) {
    if (is_ident_char(c) && c != '$') {
      cur.push_back(is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c);
    } else if ((c == '\'' || static_cast<unsigned char>(c) == 0x92) && !cur.empty()) {
      cur.push_back('\'');
    } else {
      flush();
    }
  }
  flush();
  return out;
}

namespace {
bool is_word_char(char c) { return is_ident_char(c); }
}  // namespace

bool mentions(std::string_view haystack, std::string_view name) {
  if (name.empty() || haystack.size() < name.size()) return false;
  for (std::size_t i = 0; i + name.size() <= haystack.size(); ++i) {
    if (!istarts_with(haystack.substr(i), name)) continue;
    const bool left_ok = i == 0 || !is_word_char(haystack[i - 1]);
    const std::size_t end = i + name.size();
    bool right_ok = end == haystack.size() || !is_word_char(haystack[end]);
    // "org.json.JSONObject" should not count as a mention of "org.json" when
    // followed by another identifier segment, but "org.json." at sentence end does.
    if (right_ok && end < haystack.size() && haystack[end] == '.' && end + 1 < haystack.size() &&
        is_word_char(haystack[end + 1])) {
      right_ok = false;
    }
    if (left_ok && right_ok) return true;
  }
  return false;
}

std::string decode_html_entities(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 10> kNamed{{
      {"amp", "&"},
      {"lt", "<"},
      {"gt", ">"},
      {"quot", "\""},
      {"apos", "'"},
      {"nbsp", " "},
      {"#39", "'"},
      {"hellip", "..."},
      {"ndash", "-"},
      {"mdash", "-"},
  }};
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out.push_back(s[i]);
      continue;
    }
    const auto semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back('&');
      continue;
    }
    const auto entity = s.substr(i + 1, semi - i - 1);
    bool done = false;
    for (const auto& [n, v] : kNamed) {
      if (entity == n) {
        out += v;
        done = true;
        break;
      }
    }
    if (!done && entity.size() > 1 && entity[0] == '#') {
      std::uint32_t cp = 0;
      bool ok = true;
      const bool hex = entity[1] == 'x' || entity[1] == 'X';
      for (std::size_t k = hex ? 2 : 1; k < entity.size(); ++k) {
        const char c = entity[k];
        int v = -1;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
        if (v < 0) { ok = false; break; }
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
        if (cp > 0x10FFFF) { ok = false; break; }
      }
      if (ok) {
        // UTF-8 encode
        if (cp < 0x80) {
          out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
          out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
          out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
          out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
          out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
          out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
          out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
          out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
          out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
          out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
        done = true;
      }
    }
    if (done) {
      i = semi;
    } else {
      out.push_back('&');
    }
  }
  return out;
}

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto nl = s.find('\n', start);
    if (nl == std::string_view::npos) nl = s.size();
    std::string_view line = s.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.emplace_back(line);
    start = nl + 1;
  }
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace scenariodoc::text
