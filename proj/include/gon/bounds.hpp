#ifndef GON_BOUNDS_HPP
#define GON_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gon/interval.hpp"
#include "gon/lattice.hpp"
#include "gon/rational.hpp"

namespace gon {

/** A bound that is either an exact rational or a certified real enclosure. */
class BoundValue {
  public:
    static BoundValue exact(Rational v);
    static BoundValue enclosed(Interval i);

    bool is_exact() const { return exact_.has_value(); }
    const Rational& value() const;      // requires is_exact()
    const Interval& enclosure() const;  // requires !is_exact()
    /** The value as an interval; degenerate when exact. */
    Interval as_interval() const;

  private:
    BoundValue() = default;
    std::optional<Rational> exact_;
    std::optional<Interval> interval_;
};

std::string to_string(const BoundValue& b);

/** Parameters mu_1 <= ... <= mu_k with 0 < mu_i <= lambda_i, nondecreasing. */
struct MuChoice {
    std::vector<Rational> mus;
};

/*
 * Every evaluator below returns nothing when its precondition fails (the
 * "not applicable" signal).  The reporting layer, not this module, turns
 * that into the trivial verdict that the body holds at most one lattice
 * point (exactly one in the symmetric case, since it contains the origin).
 */

/** The conjectured sharp bound: prod_i floor(2/lambda_i + 1), exact. */
BoundValue conjecture_bound(const MinimaProfile& profile);

/**
 * (4/e) * c^(n-1) * prod_{i<=n} floor(2/lambda_i + 1) as a certified
 * enclosure, where c = sqrt(3) in general and cbrt(40/9) for origin-symmetric
 * bodies.  Without the reduction n = d; with it n = k (the last index with
 * lambda <= 2, or <= 1 in the symmetric case) and the product stops at k,
 * returning nothing when no index qualifies.
 */
std::optional<BoundValue> malikiosis_bound(const MinimaProfile& profile, bool symmetric,
                                           bool use_k_reduction);
/** Same, with the constant-enclosure precision chosen by the caller. */
std::optional<BoundValue> malikiosis_bound(const MinimaProfile& profile, bool symmetric,
                                           bool use_k_reduction, const Rational& precision);

/**
 * prod_{i<=n} (2/lambda_i + n), exact; n = d, or k as above under the
 * reduction (general flavor, lambda <= 2).
 */
std::optional<BoundValue> freyer_lucas_bound(const MinimaProfile& profile, bool use_k_reduction);

/**
 * The parametric bound 2^k (1 + mu_k/2)^k / (mu_1...mu_k), exact, with
 * k = max{j : lambda_j <= 1} for origin-symmetric bodies and
 * k = max{j : lambda_j <= 2} in general.  mu must have length k and satisfy
 * the MuChoice invariants against lambda_1..lambda_k (contract violation
 * otherwise); returns nothing when k does not exist.
 */
std::optional<BoundValue> parametric_bound(const MinimaProfile& profile, const MuChoice& mu,
                                           bool symmetric);

/**
 * The parametric bound in the general flavor at the closed-form choice
 * mu_i = min(lambda_i, 1), which evaluates to 3^m / (lambda_1...lambda_k)
 * with k = last index with lambda <= 1 (empty product when none) and
 * m = last index with lambda <= 2.  Applicable exactly when some lambda_i
 * lies in (1, 2].
 */
std::optional<BoundValue> capped_bound(const MinimaProfile& profile);

/** The mu choice behind capped_bound, for the exact cross-check. */
std::optional<MuChoice> capped_bound_mu(const MinimaProfile& profile);

/**
 * Minimizer of the parametric bound over all feasible mu.  Raising any
 * mu_i with i < k strictly decreases the bound, so an optimum has
 * mu_i = min(lambda_i, t) with t = mu_k; the minimum over t is attained
 * either at some lambda_i or at a critical point 2j/(k-j) of a piece on
 * which j = #{i : lambda_i >= t} is constant.  All finitely many candidates
 * are evaluated exactly.  Returns nothing when k does not exist.
 */
std::optional<std::pair<MuChoice, BoundValue>> optimal_mu(const MinimaProfile& profile,
                                                          bool symmetric);

enum class Verdict { StrictlyLess, Equal, StrictlyGreater, Indeterminate };
std::string to_string(Verdict v);

struct NamedBound {
    std::string name;
    std::optional<BoundValue> value;  // nothing = not applicable to this profile
};

/**
 * The report's bound table, in fixed order: conjecture, malikiosis,
 * malikiosis-sym (symmetric bodies only), freyer-lucas, parametric-mu-lambda,
 * parametric-optimal, capped.  The reduction flag applies to the malikiosis
 * and freyer-lucas rows.
 */
std::vector<NamedBound> standard_bounds(const MinimaProfile& profile, bool symmetric,
                                        bool use_k_reduction);

struct BoundComparison {
    std::string left;
    std::string right;
    Verdict verdict;
};

/**
 * Pairwise verdicts between all applicable standard bounds (unreduced).
 * Exact values compare exactly; enclosures compare with precision escalation,
 * halving from the default down to 1e-60 before declaring indeterminate.
 */
std::vector<BoundComparison> compare_bounds(const MinimaProfile& profile, bool symmetric);

/**
 * Single-shot comparison of two bound values as given (exact values become
 * degenerate intervals).  Overlapping enclosures yield Indeterminate; the
 * escalation in compare_bounds re-evaluates enclosures more tightly and
 * retries this.
 */
Verdict compare_bound_values(const BoundValue& a, const BoundValue& b);

}  // namespace gon

#endif
