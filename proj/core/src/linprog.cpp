#include "equinorm/linprog.hpp"

namespace equinorm {
namespace {

// Tableau kept in canonical form: basis columns are unit columns, rhs >= 0.
struct Tableau {
  Matrix a;             // m x n_cols
  Vector rhs;           // m, nonnegative throughout
  std::vector<int> basis;

  void pivot(int row, int col) {
    const double p = a(row, col);
    a.row(row) /= p;
    rhs(row) /= p;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const double f = a(i, col);
      if (f != 0.0) {
        a.row(i) -= f * a.row(row);
        rhs(i) -= f * rhs(row);
      }
    }
    basis[static_cast<size_t>(row)] = col;
  }
};

// Runs simplex iterations with Bland's rule on the given costs.  Columns at
// or beyond `entering_limit` never enter the basis (used to freeze phase-1
// artificials during phase 2).  Returns false when unbounded.
bool run_simplex(Tableau& t, const Vector& costs, int entering_limit,
                 const LpOptions& opt, int max_iter, int* iters) {
  const int m = static_cast<int>(t.a.rows());
  while (true) {
    if (++(*iters) > max_iter)
      throw numerical_error("simplex: iteration cap exceeded (" +
                            std::to_string(max_iter) + ")");
    // Reduced costs r = c - A^T y with y_i = c_basis(i).
    Vector y(m);
    for (int i = 0; i < m; ++i) y(i) = costs(t.basis[static_cast<size_t>(i)]);
    int enter = -1;
    for (int j = 0; j < entering_limit; ++j) {
      const double r = costs(j) - t.a.col(j).dot(y);
      if (r < -opt.tol_obj) {
        enter = j;  // Bland: first eligible index
        break;
      }
    }
    if (enter < 0) return true;  // optimal

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      const double aij = t.a(i, enter);
      if (aij > opt.tol_pivot) {
        const double ratio = t.rhs(i) / aij;
        if (leave < 0 || ratio < best_ratio - opt.tol_pivot ||
            (std::abs(ratio - best_ratio) <= opt.tol_pivot &&
             t.basis[static_cast<size_t>(i)] <
                 t.basis[static_cast<size_t>(leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) return false;  // unbounded along entering column
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const LpOptions& opt) {
  const int n = lp.num_vars();
  const int mi = static_cast<int>(lp.ineq_rhs.size());
  const int me = static_cast<int>(lp.eq_rhs.size());
  require(n > 0, "solve_lp: empty objective");
  require(lp.ineq_lhs.rows() == mi && (mi == 0 || lp.ineq_lhs.cols() == n),
          "solve_lp: inequality block dimensions mismatch");
  require(lp.eq_lhs.rows() == me && (me == 0 || lp.eq_lhs.cols() == n),
          "solve_lp: equality block dimensions mismatch");
  require(is_finite(lp.objective), "solve_lp: non-finite objective");

  const int m = mi + me;
  // Standard form columns: x = u - v (2n), slacks (mi), artificials (m).
  const int n_std = 2 * n + mi;
  const int n_cols = n_std + m;

  Tableau t;
  t.a = Matrix::Zero(m, n_cols);
  t.rhs = Vector(m);
  for (int i = 0; i < m; ++i) {
    const bool is_ineq = i < mi;
    Vector row = is_ineq ? Vector(lp.ineq_lhs.row(i))
                         : Vector(lp.eq_lhs.row(i - mi));
    double b = is_ineq ? lp.ineq_rhs(i) : lp.eq_rhs(i - mi);
    require(is_finite(row) && is_finite(b), "solve_lp: non-finite constraint");
    double slack = is_ineq ? 1.0 : 0.0;
    if (b < 0.0) {
      row = -row;
      b = -b;
      slack = -slack;
    }
    t.a.block(i, 0, 1, n) = row.transpose();
    t.a.block(i, n, 1, n) = -row.transpose();
    if (is_ineq) t.a(i, 2 * n + i) = slack;
    t.a(i, n_std + i) = 1.0;
    t.rhs(i) = b;
    t.basis.push_back(n_std + i);
  }

  const int max_iter =
      opt.max_iter > 0 ? opt.max_iter : 200 * (m + n_cols) + 2000;
  int iters = 0;

  if (m > 0) {
    // Phase 1: minimize the sum of artificials.
    Vector phase1 = Vector::Zero(n_cols);
    phase1.tail(m).setOnes();
    run_simplex(t, phase1, n_cols, opt, max_iter, &iters);
    double infeas = 0.0;
    for (int i = 0; i < m; ++i)
      if (t.basis[static_cast<size_t>(i)] >= n_std) infeas += t.rhs(i);
    if (infeas > opt.tol_feas) return {LpStatus::Infeasible, Vector(), 0.0};
    // Drive remaining zero-level artificials out of the basis where a
    // structural pivot exists; all-zero rows are redundant and stay inert.
    for (int i = 0; i < m; ++i) {
      if (t.basis[static_cast<size_t>(i)] < n_std) continue;
      for (int j = 0; j < n_std; ++j) {
        if (std::abs(t.a(i, j)) > opt.tol_pivot) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2 on the original objective; artificial columns stay frozen.
  Vector phase2 = Vector::Zero(n_cols);
  phase2.head(n) = lp.objective;
  phase2.segment(n, n) = -lp.objective;
  if (!run_simplex(t, phase2, n_std, opt, max_iter, &iters))
    return {LpStatus::Unbounded, Vector(), 0.0};

  Vector std_x = Vector::Zero(n_cols);
  for (int i = 0; i < m; ++i) std_x(t.basis[static_cast<size_t>(i)]) = t.rhs(i);
  LpResult res;
  res.status = LpStatus::Optimal;
  res.solution = std_x.head(n) - std_x.segment(n, n);
  res.value = lp.objective.dot(res.solution);

  // Postcondition: the reported point satisfies the constraints.
  for (int i = 0; i < mi; ++i) {
    const double v = lp.ineq_lhs.row(i).dot(res.solution) - lp.ineq_rhs(i);
    if (v > 1e3 * opt.tol_feas)
      throw numerical_error("simplex: optimal point violates inequality row " +
                            std::to_string(i));
  }
  for (int i = 0; i < me; ++i) {
    const double v =
        std::abs(lp.eq_lhs.row(i).dot(res.solution) - lp.eq_rhs(i));
    if (v > 1e3 * opt.tol_feas)
      throw numerical_error("simplex: optimal point violates equality row " +
                            std::to_string(i));
  }
  return res;
}

}  // namespace equinorm
