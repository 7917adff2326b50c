#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcx/operator.hpp"

namespace bcx::cli {

struct VerifyOptions {
  std::uint64_t seed = 20240521;
  int trials = 100;
  /// Optional user matrix folded into the operator families.
  std::optional<BCMatrix> matrix;
};

struct FamilyResult {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

/// Randomized invariant suites, one result per family.  Deterministic for
/// a fixed seed.  trials == 0 yields no families.
std::vector<FamilyResult> run_verify(const VerifyOptions& options);

}  // namespace bcx::cli
