#pragma once

#include "unidual/rational.hpp"

#include <vector>

namespace unidual {

enum class Rel { LE, EQ, GE };

struct LinearConstraint {
  Vec a;
  Rel rel;
  Q b;
};

// maximize objective . y  subject to the constraints and y >= 0.
struct LinearProgram {
  size_t nvars = 0;
  std::vector<LinearConstraint> constraints;
  Vec objective;
};

struct LPResult {
  enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
  Q value;
  Vec y;
};

// Dense two-phase simplex over the rationals with Bland's rule.
LPResult maximize(const LinearProgram& lp);

}  // namespace unidual
