#include "gon/harness.hpp"

#include <chrono>
#include <random>

#include "gon/errors.hpp"
#include "gon/interval.hpp"
#include "gon/io.hpp"

namespace gon {

namespace {

// Inclusive uniform draw.  mt19937_64 has a fully specified output sequence,
// so instances are reproducible across platforms; the slight modulo bias is
// irrelevant for test-case generation.
long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// How aggressively the unimodular basis may be stirred, per dimension.
// Lattice point counting walks the integer bounding box of the body in
// lattice coordinates, so the basis inverse has to stay small for the walk
// to stay affordable; higher dimensions get gentler row operations and no
// densifying scales.
struct StirLimits {
    int max_extra_ops;    // ops drawn as base + rng % (extra + 1)
    int base_ops;
    long coefficient;     // row multiples drawn from [-coefficient, coefficient] \ {0}
    long entry_cap;       // skip operations that would push an entry past this
    std::vector<Rational> scales;
};

StirLimits stir_limits_for(int dimension) {
    if (dimension <= 2)
        return {2 * dimension + 1, 2 * dimension, 2, 6,
                {Rational(1, 4), Rational(1, 3), Rational(1, 2), 1, 2, 3}};
    if (dimension == 3)
        return {dimension + 1, dimension, 1, 2, {Rational(1, 2), 1, 2, 3}};
    return {dimension + 1, dimension, 1, 2, {1, 2, 3}};
}

constexpr int kRejectionBudget = 64;

Rational power_of_two(int exponent) {
    Integer n = 1;
    return Rational(n << exponent);
}

}  // namespace

Instance generate_instance(int dimension, bool symmetric, int magnitude, std::uint64_t seed) {
    if (dimension < 1 || dimension > 5)
        throw contract_error("generate_instance: dimension must be in 1..5");
    if (magnitude < 1)
        throw contract_error("generate_instance: magnitude must be >= 1");
    std::mt19937_64 rng(seed);
    const int d = dimension;
    const StirLimits limits = stir_limits_for(d);

    // Unimodular integer matrix: identity stirred by elementary row operations
    // (add an integer multiple of one row to another), each kept within the
    // entry cap.  Every operation has determinant 1, so the rows generate Z^d.
    std::vector<std::vector<long>> rows(static_cast<std::size_t>(d), std::vector<long>(d, 0));
    for (int i = 0; i < d; ++i) rows[static_cast<std::size_t>(i)][i] = 1;
    const int ops = limits.base_ops + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                          limits.max_extra_ops + 1));
    for (int op = 0; op < ops; ++op) {
        int i = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        if (d > 1)
            while (j == i) j = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        long c = draw(rng, -limits.coefficient, limits.coefficient - 1);
        if (c >= 0) ++c;  // skip zero
        if (d == 1) continue;
        bool fits = true;
        for (int t = 0; t < d; ++t) {
            long next = rows[static_cast<std::size_t>(i)][t] + c * rows[static_cast<std::size_t>(j)][t];
            if (next > limits.entry_cap || next < -limits.entry_cap) fits = false;
        }
        if (!fits) continue;
        for (int t = 0; t < d; ++t)
            rows[static_cast<std::size_t>(i)][t] += c * rows[static_cast<std::size_t>(j)][t];
    }
    const Rational scale = limits.scales[rng() % limits.scales.size()];
    RationalMatrix basis(d, d);
    for (int i = 0; i < d; ++i)
        for (int t = 0; t < d; ++t)
            basis(t, i) = scale * Rational(rows[static_cast<std::size_t>(i)][t]);
    LatticeBasis lattice(d, basis);

    const int drawn_points = d + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d + 2));
    for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
        std::vector<RationalVector> points;
        points.reserve(static_cast<std::size_t>(symmetric ? 2 * drawn_points : drawn_points));
        for (int p = 0; p < drawn_points; ++p) {
            RationalVector v(static_cast<std::size_t>(d));
            for (int t = 0; t < d; ++t) v[static_cast<std::size_t>(t)] = Rational(draw(rng, -magnitude, magnitude));
            points.push_back(std::move(v));
        }
        if (symmetric) {
            const std::size_t n = points.size();
            for (std::size_t p = 0; p < n; ++p) {
                RationalVector neg(static_cast<std::size_t>(d));
                for (int t = 0; t < d; ++t) neg[static_cast<std::size_t>(t)] = -points[p][static_cast<std::size_t>(t)];
                points.push_back(std::move(neg));
            }
        }
        Polytope hull(d, points);
        if (!hull.is_full_dimensional()) continue;
        // Store only the extreme points; for symmetric draws extremality is
        // preserved under negation, so closure of the vertex set survives.
        std::vector<RationalVector> pruned;
        for (int idx : extreme_point_indices(points))
            pruned.push_back(points[static_cast<std::size_t>(idx)]);
        Instance inst{Polytope(d, std::move(pruned)), lattice, symmetric, seed,
                      GeneratorParams{d, magnitude, drawn_points}};
        return inst;
    }
    throw generation_error("generate_instance: no full-dimensional body within " +
                           std::to_string(kRejectionBudget) + " draws (dimension " +
                           std::to_string(d) + ", magnitude " + std::to_string(magnitude) + ")");
}

namespace {

// Re-evaluates the interval-valued bounds at a requested precision; the exact
// bounds never need escalation.  Names match the rows built in
// certify_instance.
std::optional<BoundValue> reevaluate(const std::string& name, const MinimaProfile& profile,
                                     const Rational& precision) {
    if (name == "malikiosis") return malikiosis_bound(profile, false, false, precision);
    if (name == "malikiosis-sym") return malikiosis_bound(profile, true, false, precision);
    if (name == "malikiosis-reduced") return malikiosis_bound(profile, false, true, precision);
    if (name == "malikiosis-sym-reduced") return malikiosis_bound(profile, true, true, precision);
    return std::nullopt;
}

const Rational& precision_floor() {
    static const Rational floor = [] {
        Integer n = 1;
        for (int i = 0; i < 60; ++i) n *= 10;
        return Rational(1) / Rational(n);
    }();
    return floor;
}

// Decides count <= bound exactly.  Interval values that straddle the count
// are recomputed more tightly; running out of precision is a loud failure.
bool count_within(const std::string& name, const BoundValue& value, const Rational& count,
                  const MinimaProfile& profile) {
    if (value.is_exact()) return count <= value.value();
    Interval enclosure = value.enclosure();
    Rational precision = default_interval_precision();
    while (true) {
        if (auto c = compare(enclosure, count)) return *c > 0;
        if (precision <= precision_floor())
            throw indeterminate_error("bound '" + name +
                                      "' still straddles the count at the precision floor");
        precision /= 2;
        auto tighter = reevaluate(name, profile, precision);
        if (!tighter || tighter->is_exact())
            throw indeterminate_error("bound '" + name + "' cannot be re-evaluated for escalation");
        enclosure = tighter->enclosure();
    }
}

std::string violation_dump(const Instance& inst, const BoundReport& report,
                           const std::string& detail) {
    std::string out = "# bound violation\n# " + detail + "\n";
    out += emit_instance_text(inst);
    out += "count: " + std::to_string(report.count) + "\n";
    return out;
}

}  // namespace

BoundReport certify_instance(const Instance& inst) {
    const auto start = std::chrono::steady_clock::now();
    BoundReport report{inst, 0, MinimaProfile{}, {}, {}, std::nullopt, 0.0};
    report.count = count_lattice_points(inst.body, inst.lattice);
    report.minima = successive_minima(inst.body, inst.lattice);
    const MinimaProfile& profile = report.minima;
    const bool symmetric = inst.symmetric;
    const Rational count(report.count);

    std::vector<NamedBound> rows = standard_bounds(profile, symmetric, false);
    rows.push_back({"malikiosis-reduced", malikiosis_bound(profile, false, true)});
    rows.push_back({"malikiosis-sym-reduced",
                    symmetric ? malikiosis_bound(profile, true, true) : std::nullopt});
    rows.push_back({"freyer-lucas-reduced", freyer_lucas_bound(profile, true)});

    for (const auto& row : rows) {
        BoundLine line{row.name, row.value, true};
        if (row.value) {
            line.satisfied = count_within(row.name, *row.value, count, profile);
            if (!line.satisfied) {
                report.bounds.push_back(line);
                throw bound_violation_error(
                    "bound '" + row.name + "' violated by exact count " +
                        std::to_string(report.count),
                    violation_dump(inst, report, "bound '" + row.name + "' below the count"));
            }
        }
        report.bounds.push_back(std::move(line));
    }

    // With lambda_1 above the theorem threshold the parametric bounds do not
    // apply, but the theorems still promise at most one lattice point (and
    // symmetric bodies always contain the origin, so exactly one).
    const std::optional<int>& k = symmetric ? profile.k_sym : profile.k_asym;
    if (!k) {
        const bool ok = symmetric ? report.count == 1 : report.count <= 1;
        report.threshold_verdict = ok;
        if (!ok)
            throw bound_violation_error(
                "threshold claim violated: count " + std::to_string(report.count) +
                    " with lambda_1 above " + (symmetric ? std::string("1") : std::string("2")),
                violation_dump(inst, report, "lambda_1 threshold claim failed"));
    }

    report.comparisons = compare_bounds(profile, symmetric);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

Verdict flip(Verdict v) {
    if (v == Verdict::StrictlyLess) return Verdict::StrictlyGreater;
    if (v == Verdict::StrictlyGreater) return Verdict::StrictlyLess;
    return v;
}

std::optional<Verdict> verdict_between(const std::vector<BoundComparison>& comparisons,
                                       const std::string& left, const std::string& right) {
    for (const auto& c : comparisons) {
        if (c.left == left && c.right == right) return c.verdict;
        if (c.left == right && c.right == left) return flip(c.verdict);
    }
    return std::nullopt;
}

}  // namespace

CampaignSummary run_campaign(const CampaignOptions& options) {
    if (options.trials < 1) throw contract_error("run_campaign: trials must be >= 1");
    if (options.dimensions.empty())
        throw contract_error("run_campaign: dimensions must be nonempty");
    for (int d : options.dimensions)
        if (d < 1 || d > 5) throw contract_error("run_campaign: dimensions must be in 1..5");
    if (options.symmetric_ratio < 0 || options.symmetric_ratio > 1)
        throw contract_error("run_campaign: symmetric_ratio must be in [0, 1]");
    if (options.magnitude < 1) throw contract_error("run_campaign: magnitude must be >= 1");

    CampaignSummary summary;
    summary.options = options;
    summary.per_dimension.assign(options.dimensions.size(), 0);
    const long ratio_num = options.symmetric_ratio.get_num().get_si();
    const long ratio_den = options.symmetric_ratio.get_den().get_si();

    for (int trial = 0; trial < options.trials; ++trial) {
        const std::size_t dim_slot = static_cast<std::size_t>(trial) % options.dimensions.size();
        const int dimension = options.dimensions[dim_slot];
        const bool symmetric = (trial % ratio_den) < ratio_num;
        Instance inst = generate_instance(dimension, symmetric, options.magnitude,
                                          options.seed + static_cast<std::uint64_t>(trial));
        BoundReport report = certify_instance(inst);

        ++summary.instances;
        ++summary.per_dimension[dim_slot];
        if (symmetric) ++summary.symmetric_instances;
        if (report.threshold_verdict) ++summary.threshold_cases;
        bool capped_applicable = false;
        for (const auto& line : report.bounds) {
            if (!line.value) continue;
            ++summary.bound_checks;
            if (line.name == "conjecture" && line.value->is_exact() &&
                line.value->value() == Rational(report.count))
                ++summary.conjecture_equalities;
            if (line.name == "capped") capped_applicable = true;
        }
        if (capped_applicable && dimension >= 2) {
            ++summary.capped_claim_cases;
            auto verdict = verdict_between(report.comparisons, "capped", "malikiosis");
            if (verdict && *verdict == Verdict::StrictlyLess) ++summary.capped_claim_wins;
        }
    }
    summary.claim_holds = summary.capped_claim_wins == summary.capped_claim_cases;
    return summary;
}

MinkowskiVerdict minkowski_volume_check(const Instance& inst) {
    const Rational volume = volume_exact(inst.body);
    const MinimaProfile profile = successive_minima(inst.body, inst.lattice);
    MinkowskiVerdict verdict;
    verdict.lhs = volume;
    for (const auto& lambda : profile.lambdas) verdict.lhs *= lambda;
    verdict.rhs = power_of_two(inst.body.dim()) * inst.lattice.determinant_magnitude();
    verdict.holds = verdict.lhs <= verdict.rhs;
    verdict.equality = verdict.lhs == verdict.rhs;
    return verdict;
}

LimitTable mink2_limit_check(const Instance& inst, int halvings) {
    const int d = inst.body.dim();
    if (d > 3)
        throw unsupported_dimension_error(
            "mink2_limit_check: exact volume limits need dimension <= 3");
    if (halvings < 1 || halvings > 12)
        throw contract_error("mink2_limit_check: halvings must be in 1..12");

    const MinimaProfile base = successive_minima(inst.body, inst.lattice);
    LimitTable table;
    table.count_limit = volume_exact(inst.body) / inst.lattice.determinant_magnitude();
    table.bound_limit = power_of_two(d);
    for (const auto& lambda : base.lambdas) table.bound_limit /= lambda;
    table.tolerance = Rational(4) / power_of_two(halvings);
    table.complete = true;

    Rational r(1);
    for (int j = 0; j <= halvings; ++j, r /= 2) {
        RationalMatrix scaled_basis = inst.lattice.basis();
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) scaled_basis(a, b) *= r;
        LimitRow row;
        row.halving = j;
        row.r = r;
        try {
            row.count = count_lattice_points(inst.body, LatticeBasis(d, scaled_basis));
        } catch (const resource_limit_error&) {
            table.complete = false;
            break;
        }
        Rational rd(1);
        for (int t = 0; t < d; ++t) rd *= r;
        row.scaled_count = rd * Rational(row.count);
        // The minima of r Lambda are r times the minima of Lambda.
        row.scaled_bound = rd * conjecture_bound(base.scaled(r)).value();
        table.rows.push_back(std::move(row));
    }

    if (table.complete && !table.rows.empty()) {
        const LimitRow& last = table.rows.back();
        Rational count_dev = last.scaled_count - table.count_limit;
        if (count_dev < 0) count_dev = -count_dev;
        Rational bound_dev = last.scaled_bound - table.bound_limit;
        if (bound_dev < 0) bound_dev = -bound_dev;
        table.count_within_tolerance = count_dev <= table.tolerance * table.count_limit;
        table.bound_within_tolerance = bound_dev <= table.tolerance * table.bound_limit;
    }
    return table;
}

}  // namespace gon
