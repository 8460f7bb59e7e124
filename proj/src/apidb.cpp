#include "scenariodoc/apidb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

using nlohmann::json;

std::vector<std::string> tokens_of_package(std::string_view pkg) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= pkg.size()) {
    auto dot = pkg.find('.', start);
    if (dot == std::string_view::npos) dot = pkg.size();
    if (dot > start) out.emplace_back(pkg.substr(start, dot - start));
    start = dot + 1;
  }
  return out;
}

std::size_t shared_leading_tokens(std::string_view a, std::string_view b) {
  const auto ta = tokens_of_package(a);
  const auto tb = tokens_of_package(b);
  std::size_t n = 0;
  while (n < ta.size() && n < tb.size() && ta[n] == tb[n]) ++n;
  return n;
}

std::vector<std::string> string_list(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  return it->get<std::vector<std::string>>();
}

}  // namespace

std::string package_of(std::string_view fqn) {
  const auto dot = fqn.rfind('.');
  return dot == std::string_view::npos ? std::string{} : std::string(fqn.substr(0, dot));
}

bool ApiRecord::owns_fqn(std::string_view fqn) const {
  return std::any_of(packages.begin(), packages.end(), [fqn](const std::string& p) {
    return fqn.size() > p.size() && fqn.starts_with(p) && fqn[p.size()] == '.';
  });
}

bool ApiRecord::has_method(std::string_view type, std::string_view method) const {
  const auto it = methods.find(std::string(type));
  if (it == methods.end()) return false;
  return std::find(it->second.begin(), it->second.end(), method) != it->second.end();
}

std::vector<std::string> ApiRecord::spellings() const {
  std::vector<std::string> out{name};
  out.insert(out.end(), aliases.begin(), aliases.end());
  return out;
}

ApiDb ApiDb::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ApiDbError(std::string("api db is not valid JSON: ") + e.what());
  }
  if (doc.is_null()) return {};
  if (!doc.is_array()) throw ApiDbError("api db must be a JSON array of API records");
  ApiDb db;
  for (const auto& j : doc) {
    try {
      ApiRecord r;
      r.name = j.at("name").get<std::string>();
      r.aliases = string_list(j, "aliases");
      r.modules = string_list(j, "modules");
      r.packages = string_list(j, "packages");
      r.links = string_list(j, "links");
      if (const auto it = j.find("types"); it != j.end() && !it->is_null()) {
        r.types = it->get<std::map<std::string, std::string>>();
      }
      if (const auto it = j.find("methods"); it != j.end() && !it->is_null()) {
        r.methods = it->get<std::map<std::string, std::vector<std::string>>>();
      }
      db.add(std::move(r));
    } catch (const json::exception& e) {
      throw ApiDbError(std::string("api db record is malformed: ") + e.what());
    }
  }
  return db;
}

ApiDb ApiDb::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiDbError("cannot read api db " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const auto content = ss.str();
  if (text::trim(content).empty()) return {};
  return parse(content);
}

void ApiDb::add(ApiRecord record) {
  if (record.name.empty()) throw ApiDbError("api record without a name");
  const auto key = text::to_lower(record.name);
  if (by_name_.contains(key)) throw ApiDbError("duplicate api name '" + record.name + "'");
  for (const auto& [simple, fqn] : record.types) {
    if (!record.owns_fqn(fqn)) {
      throw ApiDbError("api '" + record.name + "': type " + fqn + " is outside its packages");
    }
    const auto dot = fqn.rfind('.');
    if (fqn.substr(dot + 1) != simple) {
      throw ApiDbError("api '" + record.name + "': type key " + simple + " does not match " + fqn);
    }
  }
  const std::size_t index = records_.size();
  by_name_.emplace(key, index);
  for (const auto& [simple, fqn] : record.types) by_simple_[simple].push_back({index, fqn});
  records_.push_back(std::move(record));
}

void ApiDb::merge_missing(const ApiDb& other) {
  for (const auto& r : other.records_) {
    if (find(r.name) == nullptr) add(r);
  }
}

const ApiRecord* ApiDb::find(std::string_view name) const {
  const auto it = by_name_.find(text::to_lower(name));
  return it == by_name_.end() ? nullptr : &records_[it->second];
}

std::vector<FqnCandidate> ApiDb::resolve_fqn(std::string_view simple_name,
                                             const ResolveContext& context,
                                             const ResolveWeights& weights) const {
  std::vector<FqnCandidate> out;
  const auto it = by_simple_.find(std::string(simple_name));
  if (it == by_simple_.end()) return out;

  std::vector<std::string> prefixes = context.package_prefixes;
  for (const auto& imp : context.imports) {
    if (imp.ends_with(".*")) prefixes.push_back(imp.substr(0, imp.size() - 2));
    else prefixes.push_back(package_of(imp));
  }

  const double bare = weights.bare_match / static_cast<double>(it->second.size());
  for (const auto& entry : it->second) {
    FqnCandidate c{std::string(simple_name), entry.fqn, &records_[entry.record], bare};
    const auto pkg = package_of(entry.fqn);
    const bool imported = std::any_of(context.imports.begin(), context.imports.end(), [&](const std::string& imp) {
      if (imp == entry.fqn) return true;
      return imp.ends_with(".*") && imp.substr(0, imp.size() - 2) == pkg;
    });
    if (imported) {
      c.score = weights.import_match;
    } else if (std::any_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) {
                 if (p.empty()) return false;
                 if (entry.fqn.starts_with(p + ".")) return true;
                 return shared_leading_tokens(pkg, p) >= 2;
               })) {
      c.score = weights.package_match;
    }
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const FqnCandidate& a, const FqnCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.fqn != b.fqn) return a.fqn < b.fqn;
    return a.api->name < b.api->name;
  });
  return out;
}

const ApiRecord* ApiDb::api_for_import(std::string_view import) const {
  std::string_view target = import;
  if (target.ends_with(".*")) target.remove_suffix(2);
  const ApiRecord* best = nullptr;
  std::size_t best_len = 0;
  for (const auto& r : records_) {
    for (const auto& p : r.packages) {
      const bool covers = target == p || (target.size() > p.size() && target.starts_with(p) && target[p.size()] == '.');
      if (covers && p.size() > best_len) {
        best = &r;
        best_len = p.size();
      }
    }
  }
  return best;
}

}  // namespace scenariodoc
