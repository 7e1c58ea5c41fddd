#ifndef GON_HARNESS_HPP
#define GON_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gon/bounds.hpp"
#include "gon/lattice.hpp"
#include "gon/polytope.hpp"
#include "gon/rational.hpp"

namespace gon {

/** Knobs the random generator was called with; kept for reproducibility. */
struct GeneratorParams {
    int dimension = 0;
    int magnitude = 0;     // vertex coordinates are drawn from [-magnitude, magnitude]
    int vertex_count = 0;  // points drawn before symmetrization and hulling
};

/**
 * One test case: a rational polytope against a full-rank lattice.  When
 * symmetric is set the vertex set is closed under negation, so the body is
 * origin-symmetric and the symmetric bound family applies.  seed and params
 * identify how a generated instance was produced; hand-written instances
 * carry seed 0 and zeroed params.
 */
struct Instance {
    Polytope body;
    LatticeBasis lattice;
    bool symmetric = false;
    std::uint64_t seed = 0;
    GeneratorParams params;
};

/**
 * Draws a reproducible random instance.  The lattice basis starts from the
 * identity and applies a bounded sequence of elementary integer row
 * operations (unimodular, so the lattice is Z^d up to basis change), then
 * optionally scales by a positive rational from {1/4, 1/3, 1/2, 1, 2, 3}.
 * The body is the hull of random integer points in [-magnitude, magnitude]^d,
 * with the negated points added first when symmetric is requested.  Degenerate
 * hulls are rejected and redrawn; exhausting the rejection budget raises
 * generation_error.  The result is a pure function of the arguments.
 *
 * Preconditions: 1 <= dimension <= 5, magnitude >= 1 (contract_error).
 */
Instance generate_instance(int dimension, bool symmetric, int magnitude, std::uint64_t seed);

/** One bound evaluated against an instance.  value is empty when the bound
 * does not apply; satisfied is then vacuously true. */
struct BoundLine {
    std::string name;
    std::optional<BoundValue> value;
    bool satisfied = true;
};

/**
 * Everything certify_instance computed.  elapsed_seconds is informative only
 * and excluded from the serialized form, so reports for the same instance are
 * byte-identical across runs.  When the parametric bounds are inapplicable
 * (lambda_1 above the theorem threshold) the theorems still assert a count of
 * at most 1 (exactly 1 for symmetric bodies, which always contain 0); that
 * claim's outcome is recorded in threshold_verdict.
 */
struct BoundReport {
    Instance instance;
    long count = 0;
    MinimaProfile minima;
    std::vector<BoundLine> bounds;
    std::vector<BoundComparison> comparisons;
    std::optional<bool> threshold_verdict;
    double elapsed_seconds = 0.0;
};

/**
 * Counts lattice points, computes successive minima, evaluates every
 * applicable bound (the standard family plus the k-reduced variants of the
 * Minkowski-type and factor-per-coordinate bounds), checks count <= bound
 * for each, and runs the pairwise bound comparisons.  Interval bounds that
 * straddle the count are re-evaluated at escalating precision; if the
 * comparison is still undecided at the precision floor the run fails with
 * indeterminate_error rather than guessing.  Any violated bound aborts with
 * bound_violation_error carrying a serialized counterexample.
 */
BoundReport certify_instance(const Instance& inst);

/** Options for a certification campaign. */
struct CampaignOptions {
    int trials = 0;
    std::vector<int> dimensions;       // cycled through per trial
    std::uint64_t seed = 0;            // master seed; trial t uses seed + t
    Rational symmetric_ratio;          // fraction of symmetric instances in [0, 1]
    int magnitude = 3;                 // generator coordinate bound
};

/**
 * Aggregate results of a campaign.  A campaign that returns at all had zero
 * violations (certify_instance aborts on the first one), so the counters
 * describe how the bounds behaved, not whether they held.
 */
struct CampaignSummary {
    CampaignOptions options;
    long instances = 0;
    long symmetric_instances = 0;
    std::vector<long> per_dimension;       // parallel to options.dimensions
    long bound_checks = 0;                 // applicable bound lines across all instances
    long conjecture_equalities = 0;        // instances where count == conjecture bound
    long threshold_cases = 0;              // instances on the lambda_1-above-threshold path
    long capped_claim_cases = 0;           // d >= 2 instances where the capped bound applies
    long capped_claim_wins = 0;            // ... of those, capped strictly below Minkowski-type
    bool claim_holds = false;              // capped_claim_wins == capped_claim_cases
};

/**
 * Runs trials instances through certify_instance, deterministically in the
 * master seed: trial t is generated from seed + t, its dimension cycles
 * through options.dimensions, and it is symmetric when t mod q < p for
 * symmetric_ratio p/q.  Violations propagate as bound_violation_error.
 *
 * Preconditions: trials >= 1, dimensions nonempty with entries in 1..5,
 * symmetric_ratio in [0, 1] (contract_error).
 */
CampaignSummary run_campaign(const CampaignOptions& options);

/** Exact two sides of the second-theorem volume inequality. */
struct MinkowskiVerdict {
    Rational lhs;  // vol(K) * lambda_1 ... lambda_d
    Rational rhs;  // 2^d * det(Lambda)
    bool holds = false;
    bool equality = false;
};

/**
 * Checks vol(K) * lambda_1...lambda_d <= 2^d det(Lambda) with exact
 * arithmetic.  Exact volume only exists up to dimension 3; larger dimensions
 * raise unsupported_dimension_error so callers can report the skip.
 */
MinkowskiVerdict minkowski_volume_check(const Instance& inst);

/** One row of the shrinking-lattice limit table, at r = 2^-halving. */
struct LimitRow {
    int halving = 0;
    Rational r;
    long count = 0;          // #(K intersect r Lambda)
    Rational scaled_count;   // r^d * count
    Rational scaled_bound;   // r^d * prod floor(2 / (r lambda_i) + 1)
};

/** Limit table plus the two exact limits and the final-row tolerance check. */
struct LimitTable {
    std::vector<LimitRow> rows;
    Rational count_limit;             // vol(K) / det(Lambda)
    Rational bound_limit;             // 2^d / (lambda_1 ... lambda_d)
    Rational tolerance;               // 2^(2 - halvings), relative
    bool complete = false;            // false when enumeration hit its resource cap
    bool count_within_tolerance = false;  // meaningful only when complete
    bool bound_within_tolerance = false;
};

/**
 * Tabulates r^d #(K cap r Lambda) and the correspondingly scaled conjecture
 * bound for r = 1, 1/2, ..., 2^-halvings.  The first column converges to
 * vol(K)/det(Lambda), the second decreases to 2^d/(lambda_1...lambda_d); the
 * relative deviation of the final row from each limit is checked against
 * 2^(2 - halvings) and reported in the flags.  The minima of r Lambda are the
 * minima of Lambda scaled by r, so they are computed once.  If enumeration at
 * some r exceeds its resource cap the table is returned truncated with
 * complete = false instead of failing.
 *
 * Preconditions: dimension <= 3 (unsupported_dimension_error),
 * 1 <= halvings <= 12 (contract_error).
 */
LimitTable mink2_limit_check(const Instance& inst, int halvings);

}  // namespace gon

#endif
