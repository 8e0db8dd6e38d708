#pragma once

#include <vector>

#include "ehrhart/linalg.hpp"

namespace ehrhart {

/// Exact rational linear program:
///   max / min  c . x
///   s.t.       a   . x <= b    (row-wise)
///              aeq . x  = beq
///              x >= 0 if nonneg, otherwise x free
struct LpProblem {
  RatMatrix a;
  RatVector b;
  RatMatrix aeq;
  RatVector beq;
  RatVector c;
  bool maximize = true;
  bool nonneg = false;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;          // set when optimal
  RatVector witness;  // optimal point, or improving ray when unbounded
};

/// Dense two-phase primal simplex with Bland's rule. The pivot rule is
/// fixed so that results are reproducible; exact arithmetic means the
/// only termination hazard is cycling, which Bland's rule excludes.
LpOutcome lp_solve(const LpProblem& p);

/// Feasibility of { x >= 0, aeq . x = beq } (phase I only).
bool lp_feasible_nonneg(const RatMatrix& aeq, const RatVector& beq);

}  // namespace ehrhart
