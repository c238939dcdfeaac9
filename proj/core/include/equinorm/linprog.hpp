#pragma once

// Dense two-phase simplex for the small linear programs that arise from
// polyhedral norms and gauge duals.  Variables are free; the solver splits
// them internally.  Bland's rule is used for both entering and leaving
// choices, which rules out cycling at the cost of some extra pivots.

#include "equinorm/common.hpp"

namespace equinorm {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// minimize objective . x
/// subject to ineq_lhs * x <= ineq_rhs and eq_lhs * x == eq_rhs,
/// x free.  Either constraint block may be empty (0 rows).
struct LinearProgram {
  Vector objective;
  Matrix ineq_lhs;
  Vector ineq_rhs;
  Matrix eq_lhs;
  Vector eq_rhs;

  int num_vars() const { return static_cast<int>(objective.size()); }
};

struct LpOptions {
  double tol_feas = 1e-9;
  double tol_obj = 1e-9;
  double tol_pivot = 1e-11;
  int max_iter = 0;  // 0 = automatic cap from problem size
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vector solution;  // valid when status == Optimal
  double value = 0.0;
};

LpResult solve_lp(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace equinorm
