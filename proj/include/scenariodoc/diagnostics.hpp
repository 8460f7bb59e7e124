#pragma once

#include <string>
#include <utility>
#include <vector>

namespace scenariodoc {

// Collects non-fatal problems (skipped records, recovered markup) so that a
// batch stage can keep going and still report what it dropped.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
  bool empty() const noexcept { return warnings.empty(); }
};

inline void warn_into(Diagnostics* diag, std::string message) {
  if (diag != nullptr) diag->warn(std::move(message));
}

}  // namespace scenariodoc
