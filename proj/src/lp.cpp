#include "gon/lp.hpp"

#include <utility>

#include "gon/errors.hpp"

namespace gon {

namespace {

// Dense simplex tableau: `rows` hold the constraint system with the
// right-hand side in the last column, `cost` is the reduced-cost row
// maintained by the same pivots.
struct Tableau {
    std::vector<RationalVector> rows;
    RationalVector cost;
    std::vector<int> basis;  // basis[r] = column basic in row r

    int width() const { return static_cast<int>(cost.size()); }

    void pivot(int r, int e) {
        RationalVector& prow = rows[r];
        const Rational p = prow[e];
        for (auto& v : prow)
            v /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r || rows[i][e] == 0)
                continue;
            const Rational f = rows[i][e];
            RationalVector& row = rows[i];
            for (int j = 0; j < width(); ++j)
                if (prow[j] != 0)
                    row[j] -= f * prow[j];
        }
        if (cost[e] != 0) {
            const Rational f = cost[e];
            for (int j = 0; j < width(); ++j)
                if (prow[j] != 0)
                    cost[j] -= f * prow[j];
        }
        basis[r] = e;
    }

    // Bland: entering = smallest column with negative reduced cost; leaving =
    // min-ratio row, ties broken by smallest basic column.  Returns Optimal
    // or Unbounded.
    LpStatus run(int column_limit) {
        const int rhs = width() - 1;
        for (;;) {
            int entering = -1;
            for (int j = 0; j < column_limit; ++j)
                if (cost[j] < 0) {
                    entering = j;
                    break;
                }
            if (entering < 0)
                return LpStatus::Optimal;
            int leaving = -1;
            Rational best;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r][entering] <= 0)
                    continue;
                Rational ratio = rows[r][rhs] / rows[r][entering];
                if (leaving < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leaving])) {
                    leaving = static_cast<int>(r);
                    best = std::move(ratio);
                }
            }
            if (leaving < 0)
                return LpStatus::Unbounded;
            pivot(leaving, entering);
        }
    }
};

}  // namespace

LpResult lp_maximize(const RationalVector& objective,
                     const RationalMatrix& constraints,
                     const RationalVector& rhs,
                     const std::vector<bool>& nonnegative) {
    const int m = constraints.rows();
    const int n = constraints.cols();
    if (static_cast<int>(objective.size()) != n || static_cast<int>(rhs.size()) != m ||
        static_cast<int>(nonnegative.size()) != n)
        throw contract_error("lp dimension mismatch");

    // Split free variables into positive and negative parts.
    std::vector<std::pair<int, int>> columns;  // (original var, sign)
    for (int j = 0; j < n; ++j) {
        columns.emplace_back(j, 1);
        if (!nonnegative[j])
            columns.emplace_back(j, -1);
    }
    const int nc = static_cast<int>(columns.size());
    const int width = nc + m + 1;  // structural + artificial + rhs

    Tableau t;
    t.rows.assign(m, RationalVector(width, Rational(0)));
    t.basis.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        const bool flip = rhs[i] < 0;
        for (int c = 0; c < nc; ++c) {
            Rational v = constraints(i, columns[c].first);
            if (columns[c].second < 0)
                v = -v;
            t.rows[i][c] = flip ? Rational(-v) : v;
        }
        t.rows[i][nc + i] = 1;
        t.rows[i][width - 1] = flip ? Rational(-rhs[i]) : rhs[i];
        t.basis[i] = nc + i;
    }

    // Phase I: maximize minus the sum of artificials (all basic initially).
    t.cost.assign(width, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < width; ++j)
            if (j < nc || j == width - 1)
                t.cost[j] -= t.rows[i][j];
    t.run(nc);
    if (t.cost[width - 1] != 0)  // residual artificial mass
        return {LpStatus::Infeasible, 0, {}};

    // Pivot leftover artificials out of the basis; a row with no structural
    // entry is redundant and dropped.
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
        if (t.basis[r] < nc)
            continue;
        int e = -1;
        for (int j = 0; j < nc; ++j)
            if (t.rows[r][j] != 0) {
                e = j;
                break;
            }
        if (e >= 0) {
            t.pivot(r, e);
        } else {
            t.rows.erase(t.rows.begin() + r);
            t.basis.erase(t.basis.begin() + r);
        }
    }
    // Drop artificial columns entirely.
    for (auto& row : t.rows) {
        row[nc] = row[width - 1];
        row.resize(nc + 1);
    }

    // Phase II: reduced costs of the real objective under the current basis.
    RationalVector c(nc, Rational(0));
    for (int j = 0; j < nc; ++j)
        c[j] = columns[j].second > 0 ? objective[columns[j].first]
                                     : Rational(-objective[columns[j].first]);
    t.cost.assign(nc + 1, Rational(0));
    for (int j = 0; j <= nc; ++j) {
        Rational z = 0;
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            if (t.rows[r][j] != 0)
                z += c[t.basis[r]] * t.rows[r][j];
        t.cost[j] = j < nc ? z - c[j] : z;
    }
    if (t.run(nc) == LpStatus::Unbounded)
        return {LpStatus::Unbounded, 0, {}};

    RationalVector split(nc, Rational(0));
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        split[t.basis[r]] = t.rows[r][nc];
    RationalVector witness(n, Rational(0));
    for (int jc = 0; jc < nc; ++jc)
        witness[columns[jc].first] += Rational(columns[jc].second) * split[jc];
    return {LpStatus::Optimal, dot(objective, witness), std::move(witness)};
}

bool lp_feasible(const RationalMatrix& constraints,
                 const RationalVector& rhs,
                 const std::vector<bool>& nonnegative) {
    const RationalVector zero(constraints.cols(), Rational(0));
    return lp_maximize(zero, constraints, rhs, nonnegative).status != LpStatus::Infeasible;
}

}  // namespace gon
