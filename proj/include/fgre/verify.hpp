#pragma once

#include <set>
#include <string>
#include <vector>

#include "fgre/io.hpp"

namespace fgre {

enum class CheckStatus { kPass, kFail, kSkip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kSkip;
  std::string detail;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  Json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  /// Run only these checks; empty runs all.
  std::set<std::string> only;
  /// Test hook: flip one entry of this built-in representation's w image.
  std::string corrupt_rep;
  std::size_t cap = kDefaultClosureCap;
};

/// Check names in run order.
std::vector<std::string> check_names();

/// Throws kUnknownName for an unknown name in `only`.
VerificationReport verify_all(const VerifyOptions& options = {});

}  // namespace fgre
