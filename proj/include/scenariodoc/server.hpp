#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scenariodoc/apidb.hpp"
#include "scenariodoc/config.hpp"
#include "scenariodoc/corpus.hpp"
#include "scenariodoc/diagnostics.hpp"
#include "scenariodoc/docgen_concept.hpp"
#include "scenariodoc/docgen_stats.hpp"
#include "scenariodoc/docgen_type.hpp"
#include "scenariodoc/miner.hpp"

namespace scenariodoc {

struct ManifestEntry {
  std::string name;
  std::string slug;
  std::size_t scenario_count = 0;
  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct Manifest {
  std::vector<ManifestEntry> apis;  // scenario_count descending, then name
  std::string generated_at;
  std::string config_hash;
  friend bool operator==(const Manifest&, const Manifest&) = default;
};

// Lower-case, runs of other characters collapsed to '-': "Google Gson" -> "google-gson".
std::string api_slug(std::string_view name);

void sort_manifest(std::vector<ManifestEntry>& entries);
std::string manifest_to_json(const Manifest& m);
Manifest manifest_from_json(std::string_view json_text);

struct DocBundle {
  std::string api;
  std::string slug;
  std::vector<UsageScenario> scenarios;  // the API's scenarios in mining order
  StatisticalSummary stats;
  ConceptDocumentation concepts;
  std::vector<TypeBucket> types;
  std::string generated_at;
  std::string config_hash;

  ScenarioRefs refs() const;
};

DocBundle build_bundle(const ApiRecord& api, std::vector<UsageScenario> scenarios, const Config& config,
                       std::string generated_at);

enum class DocView { kStats, kConcepts, kTypes, kAll };
std::optional<DocView> doc_view_from_string(std::string_view s);

// Serialized views, pretty-printed with a trailing newline.
std::string bundle_view_json(const DocBundle& bundle, DocView view);

struct GenerateResult {
  Manifest manifest;
  std::filesystem::path generation_dir;
  std::vector<std::string> failed_apis;
};

// Writes a new generation under out_dir/generations/<n>/ holding manifest.json
// and {bundles,stats,concepts,types}/<slug>.json, then atomically repoints
// out_dir/CURRENT at it. `generated_at` defaults to the newest scenario time.
GenerateResult document(const std::vector<UsageScenario>& scenarios, const ApiDb& db, const Config& config,
                        const std::filesystem::path& out_dir, Diagnostics* diag = nullptr,
                        std::optional<Timestamp> generated_at = std::nullopt);

// API database from a file (empty path: none) plus the built-in JDK records
// when the config asks for them.
ApiDb load_api_db(const std::filesystem::path& path, const Config& config);

// Full pipeline: load, mine, document. Throws CorpusError / ApiDbError when an
// input cannot be loaded.
GenerateResult generate_bundles(const std::filesystem::path& corpus_path, CorpusFormat format,
                                const std::filesystem::path& apidb_path, const std::filesystem::path& out_dir,
                                const Config& config, Diagnostics* diag = nullptr,
                                std::optional<Timestamp> generated_at = std::nullopt);

// Read-only view of a bundle directory. Follows CURRENT and picks up new
// generations as they are swapped in. Safe for concurrent readers.
class BundleStore {
 public:
  explicit BundleStore(std::filesystem::path out_dir);

  Manifest manifest() const;
  std::string manifest_json() const;
  // Case-insensitive prefix match on API names, by scenario count; an empty
  // prefix lists the top APIs.
  std::vector<ManifestEntry> search(std::string_view prefix, std::size_t limit) const;
  // Serialized view for an API name (case-insensitive) or slug; nullopt if unknown.
  std::optional<std::string> documentation(std::string_view api, DocView view) const;

 private:
  struct Snapshot {
    std::string pointer;
    std::filesystem::path dir;
    Manifest manifest;
    std::string manifest_json;
  };
  std::shared_ptr<const Snapshot> snapshot() const;

  std::filesystem::path root_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Snapshot> current_;
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

// Routing without sockets: GET /api/search, /api/doc/{api}/{view}, /api/manifest.
// `path` is already percent-decoded.
HttpResponse route_request(const BundleStore& store, std::string_view path,
                           const std::map<std::string, std::string>& query);

class DocServer {
 public:
  explicit DocServer(const BundleStore& store);
  ~DocServer();
  DocServer(const DocServer&) = delete;
  DocServer& operator=(const DocServer&) = delete;

  // Returns the bound port (an ephemeral one when `port` is 0), or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace scenariodoc
