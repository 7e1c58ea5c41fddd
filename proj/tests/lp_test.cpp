#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "gon/lp.hpp"
#include "gon/rational.hpp"
#include "test_util.hpp"

using namespace gon;
using gon_test::SplitMix64;

namespace {

// The oracle below is deliberately self-contained (own determinant, own
// Cramer solve) so that it shares no code with the simplex under test.

Rational det_rec(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        Rational term = m[0][j] * det_rec(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

// Maximum of objective over basic feasible solutions of {Ax = b, x >= 0}.
// Returns nothing when no basic feasible solution exists.  For standard-form
// LPs this is the exact optimum whenever the LP is feasible and bounded.
std::optional<Rational> bfs_maximum(const RationalVector& objective,
                                    const std::vector<RationalVector>& a,
                                    const RationalVector& b) {
    const std::size_t m = a.size();
    const std::size_t n = objective.size();
    std::optional<Rational> best;
    // Enumerate all m-subsets of columns by odometer.
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        // Solve A_B y = b by Cramer's rule.
        std::vector<std::vector<Rational>> basis(m, std::vector<Rational>(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) basis[r][c] = a[r][idx[c]];
        Rational d = det_rec(basis);
        if (d != 0) {
            RationalVector y(m);
            bool feasible = true;
            for (std::size_t c = 0; c < m && feasible; ++c) {
                auto col = basis;
                for (std::size_t r = 0; r < m; ++r) col[r][c] = b[r];
                y[c] = det_rec(col) / d;
                if (y[c] < 0) feasible = false;
            }
            if (feasible) {
                Rational val = 0;
                for (std::size_t c = 0; c < m; ++c) val += objective[idx[c]] * y[c];
                if (!best || val > *best) best = val;
            }
        }
        // Advance the subset odometer.
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (idx[i] + (m - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return best;
        }
        if (m == 0) return best;
    }
}

RationalMatrix rows_to_matrix(const std::vector<RationalVector>& rows) {
    const int m = static_cast<int>(rows.size());
    const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
    RationalMatrix out(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = rows[r][c];
    return out;
}

bool witness_feasible(const LpResult& res, const std::vector<RationalVector>& rows,
                      const RationalVector& rhs, const std::vector<bool>& nonneg) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < rows[r].size(); ++c) acc += rows[r][c] * res.witness[c];
        if (acc != rhs[r]) return false;
    }
    for (std::size_t c = 0; c < nonneg.size(); ++c)
        if (nonneg[c] && res.witness[c] < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("gauge-style LP: max t with t(1,1) in the cross-polytope") {
    // Variables: t free, then four hull coefficients.
    std::vector<RationalVector> rows = {
        gon_test::rational_vector({1, -1, 0, 1, 0}),
        gon_test::rational_vector({1, 0, -1, 0, 1}),
        gon_test::rational_vector({0, 1, 1, 1, 1}),
    };
    RationalVector rhs = {Rational(0), Rational(0), Rational(1)};
    RationalVector obj = gon_test::rational_vector({1, 0, 0, 0, 0});
    std::vector<bool> nonneg = {false, true, true, true, true};
    LpResult res = lp_maximize(obj, rows_to_matrix(rows), rhs, nonneg);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == make_rational(1, 2));
    CHECK(witness_feasible(res, rows, rhs, nonneg));
}

TEST_CASE("zero direction scales freely: unbounded") {
    std::vector<RationalVector> rows = {
        gon_test::rational_vector({0, -1, 0, 1, 0}),
        gon_test::rational_vector({0, 0, -1, 0, 1}),
        gon_test::rational_vector({0, 1, 1, 1, 1}),
    };
    RationalVector rhs = {Rational(0), Rational(0), Rational(1)};
    RationalVector obj = gon_test::rational_vector({1, 0, 0, 0, 0});
    std::vector<bool> nonneg = {false, true, true, true, true};
    LpResult res = lp_maximize(obj, rows_to_matrix(rows), rhs, nonneg);
    CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("sign contradiction: infeasible") {
    std::vector<RationalVector> rows = {
        gon_test::rational_vector({1, 0, 0, 0}),
        gon_test::rational_vector({1, 1, 1, 1}),
    };
    RationalVector rhs = {Rational(-1), Rational(1)};
    RationalVector obj(4, Rational(0));
    std::vector<bool> nonneg(4, true);
    LpResult res = lp_maximize(obj, rows_to_matrix(rows), rhs, nonneg);
    CHECK(res.status == LpStatus::Infeasible);
}

TEST_CASE("free variables work on both sides") {
    // max x st x + y = 3, y >= 0, x free: x = 3 at y = 0.
    std::vector<RationalVector> rows = {gon_test::rational_vector({1, 1})};
    RationalVector rhs = {Rational(3)};
    LpResult res = lp_maximize(gon_test::rational_vector({1, 0}), rows_to_matrix(rows), rhs,
                               {false, true});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == 3);
    // max -x with the same constraints: x = 3 - y is unbounded below.
    res = lp_maximize(gon_test::rational_vector({-1, 0}), rows_to_matrix(rows), rhs, {false, true});
    CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("Beale-style degenerate LP terminates under Bland") {
    // max 3/4 a - 150 b + 1/50 c - 6 d with slacks e, f, g:
    //   1/4 a - 60 b - 1/25 c + 9 d + e = 0
    //   1/2 a - 90 b - 1/50 c + 3 d + f = 0
    //   c + g = 1
    // Classic cycling example for naive pivot rules; optimum 1/20.
    std::vector<RationalVector> rows = {
        {make_rational(1, 4), Rational(-60), make_rational(-1, 25), Rational(9), Rational(1),
         Rational(0), Rational(0)},
        {make_rational(1, 2), Rational(-90), make_rational(-1, 50), Rational(3), Rational(0),
         Rational(1), Rational(0)},
        {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
         Rational(1)},
    };
    RationalVector rhs = {Rational(0), Rational(0), Rational(1)};
    RationalVector obj = {make_rational(3, 4), Rational(-150), make_rational(1, 50), Rational(-6),
                          Rational(0), Rational(0), Rational(0)};
    std::vector<bool> nonneg(7, true);
    LpResult res = lp_maximize(obj, rows_to_matrix(rows), rhs, nonneg);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == make_rational(1, 20));
    CHECK(witness_feasible(res, rows, rhs, nonneg));
}

TEST_CASE("random standard-form LPs agree with basic-solution enumeration") {
    SplitMix64 rng(97);
    int optimal_seen = 0, infeasible_seen = 0, unbounded_seen = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const std::size_t n = static_cast<std::size_t>(rng.range(m, 6));
        std::vector<RationalVector> rows(m, RationalVector(n));
        RationalVector rhs(m);
        RationalVector obj(n);
        for (auto& row : rows)
            for (auto& v : row) v = Rational(rng.range(-4, 4));
        for (auto& v : rhs) v = Rational(rng.range(-5, 5));
        for (auto& v : obj) v = Rational(rng.range(-4, 4));
        std::vector<bool> nonneg(n, true);

        LpResult res = lp_maximize(obj, rows_to_matrix(rows), rhs, nonneg);
        auto oracle = bfs_maximum(obj, rows, rhs);
        switch (res.status) {
            case LpStatus::Optimal:
                ++optimal_seen;
                REQUIRE(oracle.has_value());
                CHECK(res.value == *oracle);
                CHECK(witness_feasible(res, rows, rhs, nonneg));
                break;
            case LpStatus::Infeasible:
                ++infeasible_seen;
                CHECK(!oracle.has_value());
                break;
            case LpStatus::Unbounded:
                ++unbounded_seen;
                // Unboundedness implies feasibility, so a BFS exists, and any
                // BFS value is dominated (no finite max to compare).
                CHECK(oracle.has_value());
                break;
        }
    }
    // The generator must actually exercise all three outcomes.
    CHECK(optimal_seen > 50);
    CHECK(infeasible_seen > 10);
    CHECK(unbounded_seen > 10);
}

TEST_CASE("lp_feasible matches lp_maximize status") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
        const std::size_t n = static_cast<std::size_t>(rng.range(m, 5));
        std::vector<RationalVector> rows(m, RationalVector(n));
        RationalVector rhs(m);
        for (auto& row : rows)
            for (auto& v : row) v = Rational(rng.range(-3, 3));
        for (auto& v : rhs) v = Rational(rng.range(-4, 4));
        std::vector<bool> nonneg(n, true);
        LpResult res = lp_maximize(RationalVector(n, Rational(0)), rows_to_matrix(rows), rhs,
                                   nonneg);
        CHECK(lp_feasible(rows_to_matrix(rows), rhs, nonneg) ==
              (res.status != LpStatus::Infeasible));
    }
}
