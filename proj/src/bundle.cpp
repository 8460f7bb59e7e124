#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json_codec.hpp"
#include "scenariodoc/serialize.hpp"
#include "scenariodoc/server.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {

namespace fs = std::filesystem;
using nlohmann::json;

std::string api_slug(std::string_view name) {
  std::string out;
  bool dash = false;
  for (const char c : name) {
    if (text::is_ident_char(c) && c != '_' && c != '$') {
      if (dash && !out.empty()) out += '-';
      out += static_cast<char>(text::is_upper(c) ? c - 'A' + 'a' : c);
      dash = false;
    } else {
      dash = true;
    }
  }
  return out.empty() ? "api" : out;
}

void sort_manifest(std::vector<ManifestEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const ManifestEntry& a, const ManifestEntry& b) {
    if (a.scenario_count != b.scenario_count) return a.scenario_count > b.scenario_count;
    return a.name < b.name;
  });
}

std::string manifest_to_json(const Manifest& m) {
  json apis = json::array();
  for (const auto& e : m.apis) apis.push_back({{"name", e.name}, {"slug", e.slug}, {"scenario_count", e.scenario_count}});
  return json{{"apis", apis}, {"generated_at", m.generated_at}, {"config_hash", m.config_hash}}.dump(2) + "\n";
}

Manifest manifest_from_json(std::string_view json_text) {
  try {
    const auto j = json::parse(json_text);
    Manifest m;
    m.generated_at = j.at("generated_at").get<std::string>();
    m.config_hash = j.at("config_hash").get<std::string>();
    for (const auto& e : j.at("apis")) {
      m.apis.push_back(ManifestEntry{e.at("name").get<std::string>(), e.at("slug").get<std::string>(),
                                     e.at("scenario_count").get<std::size_t>()});
    }
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed manifest: ") + e.what());
  }
}

ScenarioRefs DocBundle::refs() const {
  ScenarioRefs out;
  out.reserve(scenarios.size());
  for (const auto& s : scenarios) out.push_back(&s);
  return out;
}

DocBundle build_bundle(const ApiRecord& api, std::vector<UsageScenario> scenarios, const Config& config,
                       std::string generated_at) {
  DocBundle b;
  b.api = api.name;
  b.slug = api_slug(api.name);
  b.scenarios = std::move(scenarios);
  b.generated_at = std::move(generated_at);
  b.config_hash = config.hash();
  const auto refs = b.refs();
  b.stats = build_statistical_summary(api.name, refs);
  b.concepts = build_concept_documentation(api, refs, config.concepts);
  b.types = build_type_buckets(api.name, refs);
  return b;
}

std::optional<DocView> doc_view_from_string(std::string_view s) {
  if (s == "stats") return DocView::kStats;
  if (s == "concepts") return DocView::kConcepts;
  if (s == "types") return DocView::kTypes;
  if (s == "all") return DocView::kAll;
  return std::nullopt;
}

namespace {

json stats_json(const DocBundle& b) {
  const auto& s = b.stats;
  json bins = json::array();
  for (const auto& m : s.timeseries) {
    bins.push_back({{"month", m.month.str()}, {"positive", m.positive}, {"negative", m.negative}});
  }
  std::vector<std::pair<std::string, std::size_t>> apis(s.co_used_apis.begin(), s.co_used_apis.end());
  std::stable_sort(apis.begin(), apis.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
  json api_items = json::array();
  for (const auto& [name, n] : apis) api_items.push_back({{"api", name}, {"count", n}});
  std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> pairs(s.co_used_types.begin(),
                                                                                 s.co_used_types.end());
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
  json type_items = json::array();
  for (const auto& [p, n] : pairs) type_items.push_back({{"types", {p.first, p.second}}, {"count", n}});
  json ratings = json::array();
  for (const auto& [t, r] : s.type_ratings) ratings.push_back({{"type", t}, {"rating", codec::rating_json(r)}});
  const bool no_opinions = s.totals.positive + s.totals.negative == 0;
  return json{{"api", s.api},
              {"scenario_count", s.scenario_count},
              {"overview", {{"positive", s.totals.positive}, {"negative", s.totals.negative}, {"empty", no_opinions}}},
              {"rating", codec::rating_json(s.rating)},
              {"timeseries", {{"empty", no_opinions}, {"bins", bins}}},
              {"co_used_apis", {{"empty", api_items.empty()}, {"items", api_items}}},
              {"co_used_types", {{"empty", type_items.empty()}, {"items", type_items}}},
              {"type_ratings", ratings}};
}

json concepts_json(const DocBundle& b) {
  json out = json::array();
  const auto& doc = b.concepts;
  for (const auto& c : doc.concepts) {
    json see_also = json::array();
    for (const auto s : c.see_also) see_also.push_back(codec::scenario_view(b.scenarios[s]));
    json patterns = json::array();
    for (const auto p : c.patterns) {
      const auto& pat = doc.patterns[p];
      patterns.push_back({{"itemset", pat.itemset},
                          {"support", pat.support},
                          {"absorbed", pat.absorbed},
                          {"residual", pat.residual},
                          {"scenario_count", pat.scenarios.size()}});
    }
    out.push_back({{"id", c.id},
                   {"title", c.title},
                   {"rating", codec::rating_json(c.rating)},
                   {"size", c.size()},
                   {"representative", codec::scenario_view(b.scenarios[c.representative])},
                   {"see_also", see_also},
                   {"patterns", patterns}});
  }
  return out;
}

json types_json(const DocBundle& b) {
  json out = json::array();
  for (const auto& t : b.types) {
    json scen = json::array();
    for (const auto s : t.scenarios) scen.push_back(codec::scenario_view(b.scenarios[s]));
    out.push_back({{"type", t.type_key}, {"type_name", t.type_name}, {"rating", codec::rating_json(t.rating)}, {"scenarios", scen}});
  }
  return out;
}

void write_file(const fs::path& path, std::string_view content) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << content;
    if (!out) throw FormatError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::vector<long> generation_numbers(const fs::path& gen_root) {
  std::vector<long> out;
  if (!fs::is_directory(gen_root)) return out;
  for (const auto& e : fs::directory_iterator(gen_root)) {
    if (!e.is_directory()) continue;
    const auto name = e.path().filename().string();
    if (name.empty() || !std::all_of(name.begin(), name.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
    out.push_back(std::stol(name));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Stand-in record for scenarios whose API is absent from the database.
ApiRecord record_from_scenarios(const std::string& name, const std::vector<UsageScenario>& scenarios) {
  ApiRecord r;
  r.name = name;
  for (const auto& s : scenarios) {
    for (const auto& t : s.api_types) r.types[t] = type_key(s, t);
  }
  return r;
}

}  // namespace

std::string bundle_view_json(const DocBundle& b, DocView view) {
  json j;
  switch (view) {
    case DocView::kStats: j = stats_json(b); break;
    case DocView::kConcepts: j = concepts_json(b); break;
    case DocView::kTypes: j = types_json(b); break;
    case DocView::kAll:
      j = json{{"api", b.api},
               {"slug", b.slug},
               {"generated_at", b.generated_at},
               {"config_hash", b.config_hash},
               {"scenario_count", b.scenarios.size()},
               {"stats", stats_json(b)},
               {"concepts", concepts_json(b)},
               {"types", types_json(b)}};
      break;
  }
  return j.dump(2) + "\n";
}

GenerateResult document(const std::vector<UsageScenario>& scenarios, const ApiDb& db, const Config& config,
                        const fs::path& out_dir, Diagnostics* diag, std::optional<Timestamp> generated_at) {
  std::map<std::string, std::vector<UsageScenario>> by_api;
  Timestamp newest{};
  for (const auto& s : scenarios) {
    by_api[s.api].push_back(s);
    newest = std::max(newest, s.created_at);
  }
  GenerateResult result;
  result.manifest.generated_at = format_timestamp(generated_at.value_or(newest));
  result.manifest.config_hash = config.hash();

  for (const auto& [name, list] : by_api) result.manifest.apis.push_back(ManifestEntry{name, "", list.size()});
  sort_manifest(result.manifest.apis);
  std::set<std::string> used_slugs;
  for (auto& e : result.manifest.apis) {
    std::string slug = api_slug(e.name);
    for (int k = 2; used_slugs.contains(slug); ++k) slug = api_slug(e.name) + "-" + std::to_string(k);
    used_slugs.insert(slug);
    e.slug = slug;
  }

  const fs::path gen_root = out_dir / "generations";
  const auto existing = generation_numbers(gen_root);
  const long seq = existing.empty() ? 1 : existing.back() + 1;
  const fs::path gen = gen_root / std::to_string(seq);
  fs::create_directories(gen);
  result.generation_dir = gen;

  std::vector<ManifestEntry> written;
  for (const auto& entry : result.manifest.apis) {
    try {
      const auto& list = by_api.at(entry.name);
      const ApiRecord* rec = db.find(entry.name);
      const ApiRecord stub = rec == nullptr ? record_from_scenarios(entry.name, list) : ApiRecord{};
      auto bundle = build_bundle(rec == nullptr ? stub : *rec, list, config, result.manifest.generated_at);
      bundle.api = entry.name;
      bundle.slug = entry.slug;
      write_file(gen / "stats" / (entry.slug + ".json"), bundle_view_json(bundle, DocView::kStats));
      write_file(gen / "concepts" / (entry.slug + ".json"), bundle_view_json(bundle, DocView::kConcepts));
      write_file(gen / "types" / (entry.slug + ".json"), bundle_view_json(bundle, DocView::kTypes));
      write_file(gen / "bundles" / (entry.slug + ".json"), bundle_view_json(bundle, DocView::kAll));
      written.push_back(entry);
    } catch (const std::exception& e) {
      result.failed_apis.push_back(entry.name);
      warn_into(diag, "bundle for " + entry.name + " failed: " + e.what());
    }
  }
  result.manifest.apis = std::move(written);
  const auto manifest = manifest_to_json(result.manifest);
  write_file(gen / "manifest.json", manifest);
  write_file(out_dir / "CURRENT", "generations/" + std::to_string(seq) + "\n");
  write_file(out_dir / "manifest.json", manifest);

  // keep the new generation and the one before it for readers still holding it
  for (const long n : existing) {
    if (n + 1 < seq) {
      std::error_code ec;
      fs::remove_all(gen_root / std::to_string(n), ec);
    }
  }
  return result;
}

ApiDb load_api_db(const fs::path& path, const Config& config) {
  ApiDb db = path.empty() ? ApiDb{} : ApiDb::load(path);
  if (config.builtin_jdk) db.merge_missing(ApiDb::builtin_jdk());
  return db;
}

GenerateResult generate_bundles(const fs::path& corpus_path, CorpusFormat format, const fs::path& apidb_path,
                                const fs::path& out_dir, const Config& config, Diagnostics* diag,
                                std::optional<Timestamp> generated_at) {
  const ApiDb db = load_api_db(apidb_path, config);
  const Corpus corpus = load_corpus(corpus_path, format, diag);
  const auto scenarios = mine_scenarios(corpus, db, config, nullptr, diag);
  return document(scenarios, db, config, out_dir, diag, generated_at);
}

}  // namespace scenariodoc
