#ifndef GON_SQUEEZE_HPP
#define GON_SQUEEZE_HPP

#include <string>

#include "gon/polytope.hpp"
#include "gon/rational.hpp"

namespace gon {

/**
 * Outcome of contracting every fiber of a convex polygon A parallel to a
 * direction v by a factor mu about the fiber midpoint.  All certificates are
 * exact rational identities:
 *
 *   area(A') = mu * area(A),   max-fiber(A') = mu * max-fiber(A),   A' in A.
 *
 * Fiber lengths are measured in units of the direction vector: the fiber
 * {x0 + s v : bot <= s <= top} has recorded length top - bot.  This keeps
 * every quantity rational; both sides of each certificate scale the same
 * way, so no verdict depends on the normalization of v.
 *
 * The contracted region need not be convex even for convex A (a kink of one
 * fiber envelope reappears in the contracted other one), so a_prime's vertex
 * list is its counterclockwise boundary cycle and its area is the shoelace
 * area of that cycle, not of the convex hull.
 */
struct SqueezeResult {
    Polytope a_prime;          // contracted polygon, vertices in boundary cycle order
    Rational mu;               // contraction factor in (0, 1]
    RationalVector direction;  // fiber direction v
    Rational area_a;
    Rational area_a_prime;
    Rational max_fiber_a;
    Rational max_fiber_a_prime;
};

/**
 * Longest fiber of the convex hull of the polygon's vertices parallel to
 * direction, in direction units.
 */
Rational max_fiber_length(const Polytope& polygon, const RationalVector& direction);

/**
 * Fiber-wise contraction of A toward the fiber midpoints.  With top/bot the
 * piecewise-linear fiber endpoints over the coordinate orthogonal to the
 * direction, A' has endpoints ((1+mu)/2) top + ((1-mu)/2) bot and the
 * mirror combination.  Midpoint centers keep A' inside A (hence inside the
 * outer body K, which only enters the containment precondition A in K) and
 * make the area and fiber certificates exact.
 */
SqueezeResult squeeze_polygon(const Polytope& k, const Polytope& a,
                              const RationalVector& direction, const Rational& mu);

/**
 * The difference-set guarantee (A'-A') cap span(v) inside mu ((A-A) cap
 * span(v)).  Both sides are symmetric segments whose lengths are twice the
 * maximal fiber lengths, so the containment is one exact inequality.  The A
 * side is recomputed from the polygon; the A' side is taken from the
 * certificate, so an inflated certificate is rejected.
 */
bool verify_difference_containment(const SqueezeResult& result, const Polytope& a);

/** A polygon cycle as plain text, one "x y" vertex per line. */
std::string polygon_cycle_text(const std::vector<RationalVector>& cycle);

}  // namespace gon

#endif
