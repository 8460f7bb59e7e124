#include "scenariodoc/config.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

struct Field {
  std::function<void(Config&, std::string_view)> set;
  std::function<std::string(const Config&)> get;
};

double parse_double(std::string_view key, std::string_view v) {
  double out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
    throw ConfigError("config: expected a number for " + std::string(key) + ", got '" +
                      std::string(v) + "'");
  }
  return out;
}

int parse_int(std::string_view key, std::string_view v) {
  int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
    throw ConfigError("config: expected an integer for " + std::string(key) + ", got '" +
                      std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("config: expected true/false for " + std::string(key));
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::map<std::string, Field, std::less<>>& fields() {
  static const std::map<std::string, Field, std::less<>> table = [] {
    std::map<std::string, Field, std::less<>> t;
    auto add_double = [&t](std::string key, auto accessor) {
      t[key] = Field{[accessor, key](Config& c, std::string_view v) { accessor(c) = parse_double(key, v); },
                     [accessor](const Config& c) { return fmt_double(accessor(const_cast<Config&>(c))); }};
    };
    auto add_int = [&t](std::string key, auto accessor) {
      t[key] = Field{[accessor, key](Config& c, std::string_view v) { accessor(c) = parse_int(key, v); },
                     [accessor](const Config& c) { return std::to_string(accessor(const_cast<Config&>(c))); }};
    };
    auto add_bool = [&t](std::string key, auto accessor) {
      t[key] = Field{[accessor, key](Config& c, std::string_view v) { accessor(c) = parse_bool(key, v); },
                     [accessor](const Config& c) { return accessor(const_cast<Config&>(c)) ? std::string("true") : std::string("false"); }};
    };
    auto add_string = [&t](std::string key, auto accessor) {
      t[key] = Field{[accessor](Config& c, std::string_view v) { accessor(c) = std::string(v); },
                     [accessor](const Config& c) { return accessor(const_cast<Config&>(c)); }};
    };

    add_bool("mining.include_questions", [](Config& c) -> bool& { return c.include_questions; });
    add_int("mining.threads", [](Config& c) -> int& { return c.threads; });
    add_string("mining.answer_url", [](Config& c) -> std::string& { return c.answer_url; });
    add_string("mining.question_url", [](Config& c) -> std::string& { return c.question_url; });
    add_double("mining.link_alpha", [](Config& c) -> double& { return c.link.type_weight; });
    add_double("mining.link_beta", [](Config& c) -> double& { return c.link.mention_weight; });
    add_double("mining.link_floor", [](Config& c) -> double& { return c.link.floor; });
    add_int("mining.max_description_sentences", [](Config& c) -> int& { return c.description.max_sentences; });
    add_double("mining.textrank_damping", [](Config& c) -> double& { return c.description.damping; });
    add_int("mining.textrank_iterations", [](Config& c) -> int& { return c.description.iterations; });
    add_int("mining.beam_width", [](Config& c) -> int& { return c.description.beam_width; });
    add_double("mining.redundancy_penalty", [](Config& c) -> double& { return c.description.redundancy_penalty; });

    add_bool("apidb.builtin_jdk", [](Config& c) -> bool& { return c.builtin_jdk; });
    add_double("apidb.import_score", [](Config& c) -> double& { return c.resolve.import_match; });
    add_double("apidb.package_score", [](Config& c) -> double& { return c.resolve.package_match; });
    add_double("apidb.bare_score", [](Config& c) -> double& { return c.resolve.bare_match; });

    add_int("snippets.min_lines", [](Config& c) -> int& { return c.classifier.min_lines; });
    add_double("snippets.java_threshold", [](Config& c) -> double& { return c.classifier.java_threshold; });

    add_string("sentiment.detector", [](Config& c) -> std::string& { return c.sentiment.detector; });
    add_string("sentiment.positive", [](Config& c) -> std::string& { return c.sentiment.positive_lexicon; });
    add_string("sentiment.negative", [](Config& c) -> std::string& { return c.sentiment.negative_lexicon; });
    add_int("sentiment.negation_window", [](Config& c) -> int& { return c.sentiment.negation_window; });
    add_double("sentiment.neutral_band", [](Config& c) -> double& { return c.sentiment.neutral_band; });
    add_double("sentiment.exclamation_boost", [](Config& c) -> double& { return c.sentiment.exclamation_boost; });

    add_int("concept.min_support", [](Config& c) -> int& { return c.concepts.min_support; });
    add_double("concept.clone_threshold", [](Config& c) -> double& { return c.concepts.clone_threshold; });
    add_int("concept.clone_min_lines", [](Config& c) -> int& { return c.concepts.clone_min_lines; });
    return t;
  }();
  return table;
}

std::string unquote(std::string_view v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') || (v.front() == '\'' && v.back() == '\''))) {
    std::string out;
    const bool basic = v.front() == '"';
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      if (basic && v[i] == '\\' && i + 2 < v.size()) {
        const char n = v[++i];
        switch (n) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          default: out.push_back(n); break;
        }
      } else {
        out.push_back(v[i]);
      }
    }
    return out;
  }
  return std::string(v);
}

std::string_view strip_comment(std::string_view line) {
  bool in_str = false;
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_str) {
      if (c == '\\' && quote == '"') ++i;
      else if (c == quote) in_str = false;
    } else if (c == '"' || c == '\'') {
      in_str = true;
      quote = c;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

}  // namespace

void Config::set(std::string_view key, std::string_view value) {
  const auto& table = fields();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("config: unknown key '" + std::string(key) + "'");
  Config next = *this;
  it->second.set(next, value);
  next.validate();
  *this = std::move(next);
}

void Config::validate() const {
  auto require = [](bool ok, const char* key, const char* what) {
    if (!ok) throw ConfigError(std::string("config: ") + key + " must be " + what);
  };
  auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  require(threads >= 0, "mining.threads", ">= 0");
  require(link.type_weight >= 0 && link.mention_weight >= 0, "mining.link_alpha/link_beta", ">= 0");
  require(unit(link.floor), "mining.link_floor", "in [0, 1]");
  require(description.max_sentences >= 1, "mining.max_description_sentences", ">= 1");
  require(description.damping > 0 && description.damping < 1, "mining.textrank_damping", "in (0, 1)");
  require(description.iterations >= 1, "mining.textrank_iterations", ">= 1");
  require(description.beam_width >= 1, "mining.beam_width", ">= 1");
  require(description.redundancy_penalty >= 0, "mining.redundancy_penalty", ">= 0");
  require(classifier.min_lines >= 1, "snippets.min_lines", ">= 1");
  require(unit(classifier.java_threshold), "snippets.java_threshold", "in [0, 1]");
  require(sentiment.negation_window >= 0, "sentiment.negation_window", ">= 0");
  require(sentiment.neutral_band >= 0, "sentiment.neutral_band", ">= 0");
  require(concepts.min_support >= 1, "concept.min_support", ">= 1");
  require(unit(concepts.clone_threshold), "concept.clone_threshold", "in [0, 1]");
  require(concepts.clone_min_lines >= 1, "concept.clone_min_lines", ">= 1");
}

void Config::merge_toml(std::string_view source) {
  std::string section;
  int lineno = 0;
  for (const auto& raw : text::split_lines(source)) {
    ++lineno;
    const auto line = text::trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config line " + std::to_string(lineno) + ": unterminated section header");
      }
      section = std::string(text::trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const auto key = text::trim(line.substr(0, eq));
    const auto value = unquote(text::trim(line.substr(eq + 1)));
    const std::string full = section.empty() ? std::string(key) : section + "." + std::string(key);
    set(full, value);
  }
}

void Config::merge_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  merge_toml(ss.str());
}

void Config::merge_env(const std::function<const char*(const char*)>& getenv) {
  for (const auto& [key, field] : fields()) {
    std::string var = "SCENARIODOC_";
    for (char c : key) {
      if (c == '.') var.push_back('_');
      else var.push_back(text::is_lower(c) ? static_cast<char>(c - 'a' + 'A') : c);
    }
    if (const char* v = getenv(var.c_str()); v != nullptr) field.set(*this, v);
  }
}

std::string Config::canonical() const {
  std::string out;
  for (const auto& [key, field] : fields()) {
    if (key == "mining.threads") continue;  // does not affect output
    out += key;
    out += '=';
    out += field.get(*this);
    out += '\n';
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string Config::hash() const { return hex64(fnv1a64(canonical())); }

Config Config::from_environment() {
  Config cfg;
  if (const char* path = std::getenv("SCENARIODOC_CONFIG"); path != nullptr && *path != '\0') {
    cfg.merge_file(path);
  }
  cfg.merge_env([](const char* name) { return std::getenv(name); });
  return cfg;
}

}  // namespace scenariodoc
