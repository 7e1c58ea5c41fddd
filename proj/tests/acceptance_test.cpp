// Acceptance gate: one test case per release criterion, each printing a
// single pass/fail line with its wall time.  Tolerances, budgets, and seeds
// are pinned here on purpose; loosening them is a release decision, not a
// test fix.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "gon/bounds.hpp"
#include "gon/errors.hpp"
#include "gon/harness.hpp"
#include "gon/io.hpp"
#include "gon/lattice.hpp"
#include "gon/polytope.hpp"
#include "gon/squeeze.hpp"
#include "test_util.hpp"

using namespace gon;
using gon_test::SplitMix64;

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
        return d.count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void report(int number, const char* name, bool ok, double seconds) {
    std::printf("acceptance %2d %-26s %s (%.2fs)\n", number, name, ok ? "PASS" : "FAIL", seconds);
    std::fflush(stdout);
}

Polytope box_of(const std::vector<Rational>& lo, const std::vector<Rational>& hi) {
    const int d = static_cast<int>(lo.size());
    std::vector<RationalVector> corners;
    for (int mask = 0; mask < (1 << d); ++mask) {
        RationalVector v(d);
        for (int i = 0; i < d; ++i) v[i] = (mask & (1 << i)) ? hi[i] : lo[i];
        corners.push_back(std::move(v));
    }
    return Polytope(d, std::move(corners));
}

Instance plain_instance(Polytope body, bool symmetric) {
    const int d = body.dim();
    return Instance{std::move(body), LatticeBasis::standard(d), symmetric, 0, GeneratorParams{}};
}

MinimaProfile profile_of(std::vector<Rational> lambdas) {
    return MinimaProfile::from_lambdas(std::move(lambdas));
}

std::optional<Verdict> verdict_between(const std::vector<BoundComparison>& comparisons,
                                       const std::string& left, const std::string& right) {
    for (const auto& c : comparisons) {
        if (c.left == left && c.right == right) return c.verdict;
        if (c.left == right && c.right == left) {
            switch (c.verdict) {
                case Verdict::StrictlyLess: return Verdict::StrictlyGreater;
                case Verdict::StrictlyGreater: return Verdict::StrictlyLess;
                default: return c.verdict;
            }
        }
    }
    return std::nullopt;
}

// Brute-force grid oracle for the mu optimizer: minimum of the parametric
// bound over mu_i = min(lambda_i, t) with t on an n-point grid.
std::optional<Rational> grid_minimum(const MinimaProfile& p, bool symmetric, int n) {
    auto kopt = symmetric ? p.k_sym : p.k_asym;
    if (!kopt) return std::nullopt;
    const int k = *kopt;
    const Rational& cap = p.lambdas[k - 1];
    std::optional<Rational> best;
    for (int i = 1; i <= n; ++i) {
        Rational t = cap * i / n;
        MuChoice mu;
        for (int j = 0; j < k; ++j) mu.mus.push_back(std::min(p.lambdas[j], t));
        Rational v = parametric_bound(p, mu, symmetric)->value();
        if (!best || v < *best) best = v;
    }
    return best;
}

// Definitional successive minima in dimension 2: gauge every lattice point
// in a large box via the standalone LP route and read the rank jumps off the
// sorted list.  Returns nothing when the box would be too large to sweep.
std::optional<std::vector<Rational>> definitional_minima_2d(const Polytope& k,
                                                            const LatticeBasis& l,
                                                            const Rational& radius,
                                                            long box_limit) {
    Polytope diff = difference_body(k);
    std::vector<Rational> h(2, Rational(0));
    for (const auto& v : diff.vertices()) {
        RationalVector z = l.to_lattice_coords(v);
        for (int i = 0; i < 2; ++i) {
            Rational a = abs(z[i]);
            if (a > h[i]) h[i] = a;
        }
    }
    std::array<long, 2> bound{};
    Integer total = 1;
    for (int i = 0; i < 2; ++i) {
        Integer b = floor_rational(radius * h[i]);
        if (!b.fits_slong_p()) return std::nullopt;
        bound[i] = b.get_si();
        total *= 2 * b + 1;
    }
    if (total > box_limit) return std::nullopt;

    std::vector<std::pair<Rational, RationalVector>> candidates;
    for (long z0 = -bound[0]; z0 <= bound[0]; ++z0)
        for (long z1 = -bound[1]; z1 <= bound[1]; ++z1) {
            if (z0 == 0 && z1 == 0) continue;
            RationalVector zq = gon_test::rational_vector({z0, z1});
            auto g = gauge(diff, l.from_lattice_coords(zq));
            if (!g) return std::nullopt;
            if (*g <= radius) candidates.emplace_back(*g, zq);
        }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Rational> lambdas;
    std::vector<RationalVector> accumulated;
    int rank = 0;
    for (const auto& [g, zq] : candidates) {
        accumulated.push_back(zq);
        if (rank_of_vectors(accumulated) > rank) {
            ++rank;
            lambdas.push_back(g * 2);
            if (rank == 2) break;
        } else {
            accumulated.pop_back();
        }
    }
    if (rank < 2) return std::nullopt;
    return lambdas;
}

}  // namespace

TEST_CASE("criterion 1: exact conjecture equality on integer boxes") {
    Stopwatch watch;
    bool ok = true;
    for (int d = 1; d <= 3 && ok; ++d) {
        std::vector<int> a(d, 1);
        while (true) {
            std::vector<Rational> lo(d, Rational(0)), hi;
            for (int i = 0; i < d; ++i) hi.emplace_back(a[i]);
            Polytope box = box_of(lo, hi);
            LatticeBasis l = LatticeBasis::standard(d);
            long count = count_lattice_points(box, l);
            BoundValue bound = conjecture_bound(successive_minima(box, l));
            if (!bound.is_exact() || bound.value() != count) {
                ok = false;
                break;
            }
            int i = 0;
            while (i < d && a[i] == 4) a[i++] = 1;
            if (i == d) break;
            ++a[i];
        }
    }
    double secs = watch.seconds();
    bool in_budget = secs < 10.0;
    report(1, "box-equality", ok && in_budget, secs);
    CHECK(ok);
    CHECK(in_budget);
}

TEST_CASE("criterion 2: parametric bound worked examples, exact") {
    Stopwatch watch;
    MinimaProfile d3 = profile_of({Rational(1, 2), Rational(1, 2), Rational(1)});
    auto d3_lambda = parametric_bound(d3, MuChoice{d3.lambdas}, false);
    auto d3_half = parametric_bound(
        d3, MuChoice{{Rational(1, 2), Rational(1, 2), Rational(1, 2)}}, false);
    auto d3_opt = optimal_mu(d3, false);

    MinimaProfile d4 =
        profile_of({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1)});
    auto d4_lambda = parametric_bound(d4, MuChoice{d4.lambdas}, false);
    auto d4_half = parametric_bound(
        d4, MuChoice{{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}}, false);
    auto d4_opt = optimal_mu(d4, false);

    bool ok = d3_lambda && d3_lambda->value() == 108 && d3_half && d3_half->value() == 125 &&
              d3_opt && d3_opt->second.value() == 108 && d4_lambda &&
              d4_lambda->value() == 648 && d4_half && d4_half->value() == 625 && d4_opt &&
              d4_opt->second.value() <= 625;
    double secs = watch.seconds();
    report(2, "parametric-examples", ok, secs);
    CHECK(ok);
}

TEST_CASE("criterion 3: capped substitution cross-check, exact") {
    Stopwatch watch;
    MinimaProfile p = profile_of({Rational(1, 2), Rational(1, 2), Rational(2)});
    auto at_lambda = parametric_bound(p, MuChoice{p.lambdas}, false);
    auto capped = capped_bound(p);
    bool ok = at_lambda && at_lambda->value() == 128 && capped && capped->value() == 108;
    double secs = watch.seconds();
    report(3, "capped-cross-check", ok, secs);
    CHECK(ok);
}

TEST_CASE("criterion 4: capped bound beats the general enclosure when it applies") {
    Stopwatch watch;
    const std::uint64_t master = 520000;
    const int needed = 1000;
    const std::array<int, 3> dims{2, 3, 4};
    int kept = 0;
    long indeterminate = 0;
    long not_strict = 0;
    for (std::uint64_t t = 0; kept < needed; ++t) {
        Instance inst = generate_instance(dims[t % 3], t % 2 == 0, 3, master + t);
        MinimaProfile p = successive_minima(inst.body, inst.lattice);
        if (p.k_asym.value_or(0) <= p.k_sym.value_or(0)) continue;
        ++kept;
        auto verdict = verdict_between(compare_bounds(p, inst.symmetric), "capped", "malikiosis");
        if (!verdict || *verdict == Verdict::Indeterminate)
            ++indeterminate;
        else if (*verdict != Verdict::StrictlyLess)
            ++not_strict;
    }
    double secs = watch.seconds();
    bool in_budget = secs < 300.0;
    bool ok = kept == needed && indeterminate == 0 && not_strict == 0;
    report(4, "capped-vs-general", ok && in_budget, secs);
    CHECK(kept == needed);
    CHECK(indeterminate == 0);
    CHECK(not_strict == 0);
    CHECK(in_budget);
}

TEST_CASE("criterion 5: soundness sweep, count within every applicable bound") {
    Stopwatch watch;
    CampaignOptions options;
    options.trials = 1000;
    options.dimensions = {1, 2, 3, 4};
    options.seed = 610000;
    options.symmetric_ratio = Rational(1, 2);
    options.magnitude = 3;
    bool ok = true;
    long instances = 0;
    std::string failure;
    try {
        CampaignSummary summary = run_campaign(options);
        instances = summary.instances;
    } catch (const error& e) {
        ok = false;
        failure = e.what();
    }
    ok = ok && instances == options.trials;
    double secs = watch.seconds();
    bool in_budget = secs < 600.0;
    report(5, "soundness-sweep", ok && in_budget, secs);
    CHECK_MESSAGE(ok, failure);
    CHECK(instances == options.trials);
    CHECK(in_budget);
}

TEST_CASE("criterion 6: Minkowski volume inequality, equality on boxes") {
    Stopwatch watch;
    long violations = 0;
    for (std::uint64_t t = 0; t < 500; ++t) {
        Instance inst = generate_instance(1 + static_cast<int>(t % 3), t % 2 == 0, 3, 630000 + t);
        if (!minkowski_volume_check(inst).holds) ++violations;
    }
    bool equalities = true;
    for (int d = 1; d <= 3; ++d) {
        std::vector<Rational> lo(d, Rational(-1)), hi(d, Rational(1));
        MinkowskiVerdict cube = minkowski_volume_check(plain_instance(box_of(lo, hi), true));
        equalities = equalities && cube.holds && cube.equality;
    }
    MinkowskiVerdict box = minkowski_volume_check(
        plain_instance(box_of({Rational(0), Rational(0)}, {Rational(2), Rational(3)}), false));
    equalities = equalities && box.holds && box.equality;
    bool ok = violations == 0 && equalities;
    double secs = watch.seconds();
    report(6, "minkowski-volume", ok, secs);
    CHECK(violations == 0);
    CHECK(equalities);
}

TEST_CASE("criterion 7: scaling limits reach their targets after 8 halvings") {
    Stopwatch watch;
    std::vector<Instance> bodies;
    bodies.push_back(plain_instance(
        box_of({Rational(-1), Rational(-1)}, {Rational(1), Rational(1)}), true));
    bodies.push_back(generate_instance(2, true, 2, 70002));
    bodies.push_back(generate_instance(2, false, 2, 70011));
    bool ok = true;
    for (const Instance& inst : bodies) {
        LimitTable table = mink2_limit_check(inst, 8);
        ok = ok && table.complete && table.count_within_tolerance &&
             table.bound_within_tolerance && table.tolerance == Rational(1, 64);
    }
    double secs = watch.seconds();
    bool in_budget = secs < 60.0;
    report(7, "limit-table", ok && in_budget, secs);
    CHECK(ok);
    CHECK(in_budget);
}

TEST_CASE("criterion 8: squeeze certificates are exact over random polygons") {
    Stopwatch watch;
    SplitMix64 rng(640000);
    long failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<RationalVector> cycle;
        while (cycle.size() < 3) {
            std::vector<RationalVector> pts;
            const int n = static_cast<int>(rng.range(3, 8));
            for (int i = 0; i < n; ++i)
                pts.push_back(gon_test::rational_vector({rng.range(-6, 6), rng.range(-6, 6)}));
            cycle = hull2d(pts);
        }
        Polytope a(2, cycle);
        auto bb = a.bounding_box();
        Polytope k = box_of({bb[0].first, bb[1].first}, {bb[0].second, bb[1].second});
        RationalVector direction = gon_test::rational_vector({0, 0});
        while (direction[0] == 0 && direction[1] == 0)
            direction = gon_test::rational_vector({rng.range(-3, 3), rng.range(-3, 3)});
        const long den = rng.range(1, 8);
        const Rational mu = make_rational(rng.range(1, den), den);

        SqueezeResult result = squeeze_polygon(k, a, direction, mu);
        bool good = result.area_a_prime == mu * result.area_a &&
                    result.max_fiber_a_prime == mu * result.max_fiber_a;
        MembershipTester inside_a(a);
        MembershipTester inside_k(k);
        for (const auto& v : result.a_prime.vertices()) good = good && inside_a(v);
        for (const auto& v : a.vertices()) good = good && inside_k(v);
        good = good && verify_difference_containment(result, a);
        if (!good) ++failures;
    }
    bool ok = failures == 0;
    double secs = watch.seconds();
    report(8, "squeeze-certificates", ok, secs);
    CHECK(failures == 0);
}

TEST_CASE("criterion 9: mu optimizer never loses to a 1000-point grid") {
    Stopwatch watch;
    SplitMix64 rng(650000);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const int d = static_cast<int>(rng.range(1, 5));
        std::vector<Rational> lambdas;
        for (int i = 0; i < d; ++i)
            lambdas.push_back(make_rational(rng.range(1, 18), rng.range(1, 6)));
        std::sort(lambdas.begin(), lambdas.end());
        MinimaProfile p = profile_of(std::move(lambdas));
        const bool symmetric = trial % 2 == 0;
        auto opt = optimal_mu(p, symmetric);
        auto grid = grid_minimum(p, symmetric, 1000);
        if (opt.has_value() != grid.has_value()) {
            ok = false;
            break;
        }
        if (!opt) continue;
        ok = opt->second.value() <= *grid;
        const int k = static_cast<int>(opt->first.mus.size());
        const Rational& cap = p.lambdas[k - 1];
        Rational steps = opt->first.mus.back() * 1000 / cap;
        if (ok && steps == Rational(floor_rational(steps)) && steps >= 1 && steps <= 1000)
            ok = opt->second.value() == *grid;
    }
    double secs = watch.seconds();
    report(9, "mu-optimizer-grid", ok, secs);
    CHECK(ok);
}

TEST_CASE("criterion 10: greedy minima equal the definitional sweep in d=2") {
    Stopwatch watch;
    int kept = 0;
    long mismatches = 0;
    for (std::uint64_t t = 0; kept < 100 && t < 1000; ++t) {
        Instance inst = generate_instance(2, t % 2 == 0, 3, 660000 + t);
        MinimaProfile p = successive_minima(inst.body, inst.lattice);
        auto oracle =
            definitional_minima_2d(inst.body, inst.lattice, p.lambdas[1] / 2 + 1, 200000);
        if (!oracle) continue;
        ++kept;
        if (p.lambdas != *oracle) ++mismatches;
    }
    bool ok = kept == 100 && mismatches == 0;
    double secs = watch.seconds();
    report(10, "minima-brute-force", ok, secs);
    CHECK(kept == 100);
    CHECK(mismatches == 0);
}

TEST_CASE("criterion 11: campaigns with one seed are byte-identical") {
    Stopwatch watch;
    CampaignOptions options;
    options.trials = 40;
    options.dimensions = {1, 2, 3, 4};
    options.seed = 777;
    options.symmetric_ratio = Rational(1, 2);
    options.magnitude = 2;
    std::string first = emit_campaign_text(run_campaign(options));
    std::string second = emit_campaign_text(run_campaign(options));
    bool reports_match = true;
    for (std::uint64_t seed : {777ULL, 790ULL, 805ULL}) {
        Instance a = generate_instance(3, seed % 2 == 0, 2, seed);
        Instance b = generate_instance(3, seed % 2 == 0, 2, seed);
        reports_match = reports_match &&
                        emit_report_text(certify_instance(a)) == emit_report_text(certify_instance(b));
    }
    bool ok = first == second && reports_match;
    double secs = watch.seconds();
    report(11, "campaign-determinism", ok, secs);
    CHECK(first == second);
    CHECK(reports_match);
}
