#pragma once

#include <cstddef>
#include <deque>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scenariodoc/config.hpp"

namespace scenariodoc {

class ApiDbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ApiRecord {
  std::string name;
  std::vector<std::string> aliases;  // extra spellings used when detecting mentions in text
  std::vector<std::string> modules;
  std::vector<std::string> packages;
  std::map<std::string, std::string> types;  // simple name -> FQN
  std::map<std::string, std::vector<std::string>> methods;  // simple type name -> method names
  std::vector<std::string> links;

  bool owns_fqn(std::string_view fqn) const;
  bool has_type(std::string_view simple) const { return types.contains(std::string(simple)); }
  bool has_method(std::string_view type, std::string_view method) const;
  // Name and aliases, in that order.
  std::vector<std::string> spellings() const;
};

struct FqnCandidate {
  std::string simple_name;
  std::string fqn;
  const ApiRecord* api = nullptr;
  double score = 0.0;  // in [0, 1]
};

struct ResolveContext {
  std::vector<std::string> imports;           // "a.b.C", "a.b.*"
  std::vector<std::string> package_prefixes;  // e.g. packages named in surrounding text
};

// Record addresses are stable for the lifetime of the database (including
// across moves), so FqnCandidate::api may be held while the ApiDb lives.
class ApiDb {
 public:
  ApiDb() = default;
  ApiDb(ApiDb&&) noexcept = default;
  ApiDb& operator=(ApiDb&&) noexcept = default;
  ApiDb(const ApiDb&) = delete;
  ApiDb& operator=(const ApiDb&) = delete;

  // Throws ApiDbError on unreadable files, schema violations and duplicate names.
  static ApiDb load(const std::filesystem::path& path);
  static ApiDb parse(std::string_view json_text);
  // Java SE/EE packages most often seen in forum code.
  static ApiDb builtin_jdk();

  void add(ApiRecord record);
  // Adds every record of `other` whose name is not already present.
  void merge_missing(const ApiDb& other);

  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const std::deque<ApiRecord>& records() const noexcept { return records_; }
  const ApiRecord* find(std::string_view name) const;  // case-insensitive

  // Ranked candidates (score descending, then FQN, then API name). Unknown
  // names give an empty list.
  std::vector<FqnCandidate> resolve_fqn(std::string_view simple_name, const ResolveContext& context,
                                        const ResolveWeights& weights = {}) const;

  // API whose package list covers the import (longest package wins).
  const ApiRecord* api_for_import(std::string_view import) const;

 private:
  struct TypeEntry {
    std::size_t record;
    std::string fqn;
  };
  std::deque<ApiRecord> records_;
  std::unordered_map<std::string, std::size_t> by_name_;  // lower-cased name
  std::unordered_map<std::string, std::vector<TypeEntry>> by_simple_;
};

std::string package_of(std::string_view fqn);  // "a.b.C" -> "a.b"

}  // namespace scenariodoc
