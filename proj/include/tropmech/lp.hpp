#pragma once

// Exact rational linear programming. Primal simplex on a dense tableau with
// Bland's rule, so termination is guaranteed on degenerate inputs. Problem
// sizes in this project stay small (tens of variables, at most a few thousand
// constraints), which makes exactness affordable.

#include <vector>

#include "tropmech/rational.hpp"

namespace tropmech {

enum class Relation { GreaterEq, Eq };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearConstraint {
  QVec coeffs;
  Relation rel = Relation::GreaterEq;
  Rational rhs;
};

// Variables are free (unrestricted in sign).
struct LinearProgram {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  QVec objective;
  Sense sense = Sense::Minimize;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational optimum;  // meaningful iff status == Optimal
  // Optimal: a point attaining the optimum. Unbounded: an improving ray.
  QVec witness;
};

LpOutcome lp_solve(const LinearProgram& lp);

// Mixed weak/strict system. A strict row means coeffs . x > rhs (for
// GreaterEq) resp. unchanged equality (strict equalities are not a thing).
struct StrictConstraint {
  QVec coeffs;
  Relation rel = Relation::GreaterEq;
  Rational rhs;
  bool strict = false;
};

struct StrictSystem {
  int num_vars = 0;
  std::vector<StrictConstraint> constraints;
};

struct StrictOutcome {
  bool feasible = false;
  QVec witness;    // interior point when feasible
  Rational margin;  // the maximized slack, in (0, 1] when feasible
};

// Decides strict feasibility by introducing one bounded slack variable and
// maximizing it; the system is strictly feasible iff the optimum is positive.
StrictOutcome lp_feasible_strict(const StrictSystem& sys);

}  // namespace tropmech
