#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "scenariodoc/serialize.hpp"
#include "scenariodoc/server.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_body(std::string_view code, std::string_view message) {
  return json{{"error", code}, {"message", message}}.dump() + "\n";
}

std::string_view view_dir(DocView v) {
  switch (v) {
    case DocView::kStats: return "stats";
    case DocView::kConcepts: return "concepts";
    case DocView::kTypes: return "types";
    case DocView::kAll: return "bundles";
  }
  return "bundles";
}

}  // namespace

BundleStore::BundleStore(fs::path out_dir) : root_(std::move(out_dir)) {}

std::shared_ptr<const BundleStore::Snapshot> BundleStore::snapshot() const {
  std::string pointer;
  if (auto cur = read_file(root_ / "CURRENT")) pointer = std::string(text::trim(*cur));
  std::lock_guard lock(mu_);
  if (current_ && current_->pointer == pointer) return current_;
  auto snap = std::make_shared<Snapshot>();
  snap->pointer = pointer;
  snap->dir = pointer.empty() ? root_ : root_ / pointer;
  if (auto m = read_file(snap->dir / "manifest.json")) {
    snap->manifest = manifest_from_json(*m);
    snap->manifest_json = std::move(*m);
  } else {
    snap->manifest_json = manifest_to_json(snap->manifest);
  }
  current_ = std::move(snap);
  return current_;
}

Manifest BundleStore::manifest() const { return snapshot()->manifest; }

std::string BundleStore::manifest_json() const { return snapshot()->manifest_json; }

std::vector<ManifestEntry> BundleStore::search(std::string_view prefix, std::size_t limit) const {
  const auto snap = snapshot();
  std::vector<ManifestEntry> out;
  for (const auto& e : snap->manifest.apis) {
    if (out.size() >= limit) break;
    if (text::istarts_with(e.name, prefix)) out.push_back(e);
  }
  return out;
}

std::optional<std::string> BundleStore::documentation(std::string_view api, DocView view) const {
  const auto snap = snapshot();
  for (const auto& e : snap->manifest.apis) {
    if (text::iequals(e.name, api) || e.slug == api) {
      return read_file(snap->dir / view_dir(view) / (e.slug + ".json"));
    }
  }
  return std::nullopt;
}

HttpResponse route_request(const BundleStore& store, std::string_view path,
                           const std::map<std::string, std::string>& query) {
  try {
    if (path == "/api/manifest") return {200, store.manifest_json()};
    if (path == "/api/search") {
      std::string q;
      std::size_t limit = 10;
      if (auto it = query.find("q"); it != query.end()) q = it->second;
      if (auto it = query.find("limit"); it != query.end()) {
        try {
          const long v = std::stol(it->second);
          if (v < 0) throw std::invalid_argument("negative");
          limit = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
          return {400, error_body("bad_request", "limit must be a non-negative integer")};
        }
      }
      json results = json::array();
      for (const auto& e : store.search(q, limit)) {
        results.push_back({{"name", e.name}, {"slug", e.slug}, {"scenario_count", e.scenario_count}});
      }
      return {200, json{{"query", q}, {"results", results}}.dump() + "\n"};
    }
    constexpr std::string_view kDoc = "/api/doc/";
    if (path.starts_with(kDoc)) {
      const auto rest = path.substr(kDoc.size());
      const auto slash = rest.rfind('/');
      if (slash == std::string_view::npos || slash == 0) return {404, error_body("not_found", "no such route")};
      const std::string api(rest.substr(0, slash));
      const auto view = doc_view_from_string(rest.substr(slash + 1));
      if (!view) return {400, error_body("bad_request", "view must be one of stats, concepts, types, all")};
      if (auto body = store.documentation(api, *view)) return {200, std::move(*body)};
      return {404, error_body("not_found", "unknown API: " + api)};
    }
    return {404, error_body("not_found", "no such route")};
  } catch (const std::exception& e) {
    return {500, error_body("internal", e.what())};
  }
}

struct DocServer::Impl {
  explicit Impl(const BundleStore& s) : store(s) {}
  const BundleStore& store;
  httplib::Server server;
};

DocServer::DocServer(const BundleStore& store) : impl_(std::make_unique<Impl>(store)) {
  auto& svr = impl_->server;
  svr.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Methods", "GET, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  svr.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  svr.Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    auto r = route_request(impl_->store, req.path, query);
    res.status = r.status;
    res.set_content(std::move(r.body), "application/json");
  });
}

DocServer::~DocServer() { stop(); }

int DocServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool DocServer::listen() { return impl_->server.listen_after_bind(); }

void DocServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace scenariodoc
