#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenfold/divclass.hpp"

namespace tenfold {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SectionResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct SelftestOptions {
  /// Run a single section: "tenfold", "clifford", "periodicity", "morita",
  /// "threefold". Empty = all.
  std::optional<std::string> section;
  /// Test hook: serve a wrong table for this canonical label so the
  /// round-trip and distinctness checks demonstrably catch corruption.
  std::optional<TenLabel> corruptCanon;
};

/// Known section names, in report order.
const std::vector<std::string>& selftestSections();

/// Runs the bundled verification corpus. Sections execute in parallel; the
/// report order is fixed regardless of completion order.
std::vector<SectionResult> runSelftest(const SelftestOptions& options = {});

}  // namespace tenfold
