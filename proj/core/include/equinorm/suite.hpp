#pragma once

// The acceptance battery: eight named criteria covering the fixed-point
// construction, the renorming pipeline, certification closure, the
// Danzer-Grunbaum bound, oracle equivalence, norm axioms, the spreading
// composite and the corollary pipeline.

#include <string>
#include <vector>

namespace equinorm {

struct CriterionResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string details;  // per-check summary; failures prefixed with FAIL
};

/// The eight criterion names, in battery order.
const std::vector<std::string>& criterion_names();

/// Runs one criterion; unknown names throw invalid_input_error listing the
/// valid ones.  Exceptions inside a criterion are converted into a failing
/// result carrying the message.
CriterionResult run_criterion(const std::string& name);

/// Runs the named criteria (all when names is empty) and returns results in
/// battery order.
std::vector<CriterionResult> run_suite(const std::vector<std::string>& names = {},
                                       bool parallel = true);

}  // namespace equinorm
