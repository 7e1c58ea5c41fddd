#ifndef GON_LP_HPP
#define GON_LP_HPP

#include <vector>

#include "gon/matrix.hpp"
#include "gon/rational.hpp"

namespace gon {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rational value;          // meaningful when Optimal
    RationalVector witness;  // feasible point achieving value, original variable order
};

/**
 * Exact linear programming over the rationals:
 *
 *     maximize  objective . x
 *     s.t.      constraints x = rhs
 *               x_j >= 0 for each flagged variable (others free)
 *
 * Two-phase simplex on a fully rational tableau with Bland's anti-cycling
 * rule, so it terminates on every input.  "Infeasible" and "Unbounded" are
 * exact facts certified by the final tableau, never numeric guesses.
 */
LpResult lp_maximize(const RationalVector& objective,
                     const RationalMatrix& constraints,
                     const RationalVector& rhs,
                     const std::vector<bool>& nonnegative);

/** Feasibility of constraints x = rhs, x >= 0 on the flagged variables. */
bool lp_feasible(const RationalMatrix& constraints,
                 const RationalVector& rhs,
                 const std::vector<bool>& nonnegative);

}  // namespace gon

#endif
