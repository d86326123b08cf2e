#ifndef CRWB_LINPROG_HPP
#define CRWB_LINPROG_HPP

#include <vector>

#include "crwb/jet.hpp"

namespace crwb {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// maximize c.x subject to eq_A x = eq_b and ge_A x >= ge_b, x free.
///
/// Dense two-phase simplex with Bland's pivot rule: deterministic and
/// cycle-free. Intended for the tiny certification programs (tens of
/// variables, hundreds of rows).
struct LpProblem {
  Vec c;
  Mat eq_A;
  Vec eq_b;
  Mat ge_A;
  Vec ge_b;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec x;
  double objective = 0.0;
};

LpResult solve_lp(const LpProblem& prob);

}  // namespace crwb

#endif
