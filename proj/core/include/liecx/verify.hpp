#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liecx/algebra.hpp"

namespace liecx {

enum class CheckStatus { kPass, kFail, kDiscrepancyNoted };

struct CheckRecord {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  CheckStatus status;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  bool failed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::kFail) return true;
    return false;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1729;
  int trials = 5;
  /// Catalog overrides keyed by algebra name (e.g. "IHa(3)"); checks that
  /// consume a named algebra pick the override instead of the built-in.
  std::map<std::string, LieAlgebra> overrides;
};

/// Runs the built-in reference-result suite: the dimension/invariant-count
/// table, the central extensions (IE, IHa, ISp, the extension-free set), all
/// tabulated invariant operators, the matrix-realization identities, the
/// property suites, and the tabulated-vs-computed discrepancy protocol.
VerifyReport run_reference_checks(const VerifyOptions& opts = {});

std::string report_to_json(const VerifyReport& report);
std::string report_to_text(const VerifyReport& report);

}  // namespace liecx
