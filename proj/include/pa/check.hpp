#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pa/export.hpp"
#include "pa/limits.hpp"

namespace pa {

struct CheckOptions {
  /// Test hook: drop the fractional part epsilon(k) from every kappa before
  /// verifying. Has no effect at n = 1, where epsilon vanishes.
  bool perturb = false;
  EnumerationLimits limits;
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::vector<std::string> failures;  // truncated to a few samples
};

struct CheckReport {
  int n = 0;
  std::size_t b1_count = 0;
  std::vector<std::uint64_t> f_vector;
  std::vector<CheckResult> checks;

  bool ok() const;
  Json to_json() const;
};

/// Vertex systems, strict inequalities, simplicity, distinctness,
/// facet-definingness, graph equality and face counts.
CheckReport run_check(int n, const CheckOptions& options = {});

}  // namespace pa
