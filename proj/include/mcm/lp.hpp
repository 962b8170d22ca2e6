#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mcm/matrix.hpp"

namespace mcm {

// Canonical-form linear program:
//
//   minimize    c . z
//   subject to  A z >= b            (R rows)
//               z_j >= 0            for j in nonneg; other variables free
//
// This is the substrate every training formulation reduces to.
struct LpProblem {
  std::vector<double> c;    // length N
  Matrix A;                 // R x N
  std::vector<double> b;    // length R
  std::vector<int> nonneg;  // sorted, unique indices into [0, N)

  int num_vars() const { return static_cast<int>(c.size()); }
  int num_rows() const { return A.rows; }

  // Shape/index checks plus NaN/Inf rejection. Throws Error.
  void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

const char* lp_status_name(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::iteration_limit;
  std::vector<double> z;  // length N, valid iff status == optimal
  double objective = 0.0;
  int iterations = 0;
};

struct SolveOptions {
  double tol_feas = 1e-9;
  double tol_opt = 1e-9;
  int max_iter = 0;          // 0 -> 50 * (rows + columns)
  int refine_interval = 50;  // basic-value refinement cadence; 0 disables
  bool parallel = true;      // OpenMP row elimination in the tableau
};

// Two-phase primal simplex on the standard-form transformation (free
// variables split, surplus variables appended, artificials only for rows no
// crash column covers). Dantzig pricing, switching permanently to Bland's
// rule after a run of consecutive degenerate pivots. Never throws for
// infeasible/unbounded/limit outcomes; those are reported in the status.
LpSolution lp_solve(const LpProblem& p, const SolveOptions& opts = {});

// Exact optimum by enumeration of all basic solutions of the standard form.
// Test oracle for small instances: requires <= 14 standard-form variables
// and <= 10 rows. Ties between optimal vertices are broken by the
// lexicographically smallest basis index set.
LpSolution lp_enumerate_oracle(const LpProblem& p);

// Plain-text debug dump (dimensions, then c, A, b, nonneg set); layout is
// documented in docs/formats.md.
void dump_lp(const LpProblem& p, std::ostream& os);

// --- standard form -------------------------------------------------------
//
// min c.x  s.t.  A x = b, x >= 0, with b >= 0 componentwise. Free variables
// are split into positive/negative parts occupying adjacent columns; every
// row gets its own surplus column, so A always has full row rank. Shared by
// the solver and the enumeration oracle.
struct StandardForm {
  Matrix A;               // R x num_cols
  std::vector<double> c;  // num_cols
  std::vector<double> b;  // R, nonnegative
  int num_cols = 0;

  struct VarCols {
    int pos = -1;
    int neg = -1;  // >= 0 only for free variables
  };
  std::vector<VarCols> var_cols;    // per original variable
  std::vector<int> surplus_col;     // per row
  std::vector<int8_t> row_negated;  // per row: 1 if multiplied by -1
};

StandardForm to_standard_form(const LpProblem& p);

// Recombines split variables: z_j = x[pos] - x[neg].
std::vector<double> recover_solution(const StandardForm& sf,
                                     std::span<const double> x);

}  // namespace mcm
