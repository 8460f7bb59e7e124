#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scenariodoc/miner.hpp"

namespace scenariodoc {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// scenarios.json: an array of scenarios with every mined field, so that
// documentation can be generated without re-mining.
std::string scenarios_to_json(const std::vector<UsageScenario>& scenarios);
std::vector<UsageScenario> scenarios_from_json(std::string_view json_text);

void save_scenarios(const std::filesystem::path& path, const std::vector<UsageScenario>& scenarios);
std::vector<UsageScenario> load_scenarios(const std::filesystem::path& path);

}  // namespace scenariodoc
