#pragma once

#include <vector>

#include "tropsym/rational.hpp"

namespace tropsym {

/// Standard-form linear program: minimize c.y subject to A y = b, y >= 0.
struct StandardLp {
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Rational> primal;  // y
  /// Simplex multipliers pi = c_B B^-1, one per row of A (0 for rows found
  /// to be redundant). Optimal for the dual max b.pi s.t. A^T pi <= c.
  std::vector<Rational> dual;
};

/// Exact two-phase primal simplex with Bland's rule, so it never cycles and
/// always pivots deterministically on the lowest eligible index.
LpResult solveLp(const StandardLp& lp);

}  // namespace tropsym
