#include "gon/polytope.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gon/errors.hpp"
#include "gon/lp.hpp"

namespace gon {

namespace {

bool lex_less(const RationalVector& a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// Simplex on min{sum y : sum y_v v = x, y >= 0} over a generator list that
// is closed under negation and spans the space, kept as an explicit basis
// inverse of size dim.  The result is the gauge of x with respect to the
// hull of the generators, certified before use: the hull multipliers must
// reproduce x and the final price vector must be feasible for the polar.
// Returns false when no certificate was reached (the caller falls back to
// the dense LP), never a wrong value.  Bland's rule on generator indices
// guarantees termination; the iteration cap only guards implementation
// faults.
bool active_set_hull_gauge(const std::vector<RationalVector>& verts, int dim,
                           const std::vector<int>& negation_of, const std::vector<int>& start_cols,
                           const RationalMatrix& start_inverse, const RationalVector& x,
                           Rational& out) {
    const int n = static_cast<int>(verts.size());
    bool zero = true;
    for (int i = 0; i < dim && zero; ++i)
        if (x[i] != 0) zero = false;
    if (zero) {
        out = 0;
        return true;
    }

    // Warm start: express x over the fixed independent columns, then swap
    // each negative coefficient for the negated vertex, which flips the
    // matching row of the inverse.
    RationalVector coeff = start_inverse.apply(x);
    std::vector<int> basis(dim);
    RationalVector y(dim);
    RationalMatrix binv = start_inverse;
    for (int i = 0; i < dim; ++i) {
        if (coeff[i] >= 0) {
            basis[i] = start_cols[i];
            y[i] = coeff[i];
        } else {
            basis[i] = negation_of[start_cols[i]];
            y[i] = -coeff[i];
            for (int j = 0; j < dim; ++j) binv(i, j) = -binv(i, j);
        }
    }

    const int max_pivots = 64 + 8 * n;
    RationalVector price(dim);
    for (int iter = 0; iter <= max_pivots; ++iter) {
        for (int j = 0; j < dim; ++j) {
            Rational s(0);
            for (int i = 0; i < dim; ++i) s += binv(i, j);
            price[j] = s;
        }
        int entering = -1;
        for (int j = 0; j < n && entering < 0; ++j)
            if (dot(price, verts[j]) > 1) entering = j;
        if (entering < 0) {
            Rational g(0);
            RationalVector rebuilt(dim, Rational(0));
            for (int i = 0; i < dim; ++i) {
                if (y[i] < 0) return false;
                g += y[i];
                for (int j = 0; j < dim; ++j) rebuilt[j] += y[i] * verts[basis[i]][j];
            }
            for (int j = 0; j < dim; ++j)
                if (rebuilt[j] != x[j]) return false;
            if (dot(price, x) != g) return false;
            out = std::move(g);
            return true;
        }
        RationalVector u(dim);
        for (int i = 0; i < dim; ++i) {
            Rational s(0);
            for (int j = 0; j < dim; ++j) s += binv(i, j) * verts[entering][j];
            u[i] = s;
        }
        int leave = -1;
        Rational best;
        for (int i = 0; i < dim; ++i) {
            if (u[i] <= 0) continue;
            Rational ratio = y[i] / u[i];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        if (leave < 0)
            return false;  // objective is bounded below by 0, so never legitimate
        for (int i = 0; i < dim; ++i)
            if (i != leave) y[i] -= best * u[i];
        y[leave] = best;
        basis[leave] = entering;
        const Rational piv = u[leave];
        for (int j = 0; j < dim; ++j) binv(leave, j) /= piv;
        for (int i = 0; i < dim; ++i) {
            if (i == leave || u[i] == 0) continue;
            for (int j = 0; j < dim; ++j) binv(i, j) -= u[i] * binv(leave, j);
        }
    }
    return false;
}

// Extreme points of a point cloud closed under negation, for the dimensions
// where the per-point hull LP over the whole cloud gets expensive.  An inner
// hull S grows point by point: a point certified inside hull(S) cannot be
// extreme and is dropped, everything else joins S together with its
// negation.  A final exact pass over the small S removes the survivors that
// later additions made redundant.  Falls back to the generic test whenever
// the cloud is not actually symmetric or not full-dimensional.
std::vector<int> symmetric_extreme_indices(const std::vector<RationalVector>& pts, int dim) {
    const int n = static_cast<int>(pts.size());
    std::map<RationalVector, int, bool (*)(const RationalVector&, const RationalVector&)> index(
        lex_less);
    for (int i = 0; i < n; ++i) index.emplace(pts[i], i);
    std::vector<int> neg(n, -1);
    int zero_at = -1;
    for (int i = 0; i < n; ++i) {
        RationalVector m(dim);
        bool zero = true;
        for (int j = 0; j < dim; ++j) {
            m[j] = -pts[i][j];
            if (pts[i][j] != 0) zero = false;
        }
        if (zero) {
            zero_at = i;
            neg[i] = i;
            continue;
        }
        auto it = index.find(m);
        if (it == index.end()) return extreme_point_indices(pts);
        neg[i] = it->second;
    }

    std::vector<RationalVector> s_pts;
    std::vector<int> s_orig;
    std::vector<int> s_neg;
    std::vector<char> in_s(n, 0), dropped(n, 0);
    auto add_pair = [&](int i) {
        const int a = static_cast<int>(s_pts.size());
        s_pts.push_back(pts[i]);
        s_orig.push_back(i);
        s_pts.push_back(pts[neg[i]]);
        s_orig.push_back(neg[i]);
        s_neg.push_back(a + 1);
        s_neg.push_back(a);
        in_s[i] = in_s[neg[i]] = 1;
    };

    // One representative per +-pair, far points first: extreme points tend
    // to carry the largest coordinate sums, so the inner hull converges
    // after a handful of additions and nearly every later point is dropped
    // on its first test.
    std::vector<int> order;
    order.reserve(n / 2 + 1);
    std::vector<Rational> weight(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (i == zero_at || pts[i] < pts[neg[i]]) continue;
        Rational s(0);
        for (int j = 0; j < dim; ++j) s += abs(pts[i][j]);
        weight[i] = std::move(s);
        order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (weight[a] != weight[b]) return weight[a] > weight[b];
        return a < b;
    });

    // Seed with a spanning set so the engine has a warm-start basis.
    std::vector<RationalVector> chosen;
    std::vector<int> start_cols;
    for (int i : order) {
        if (static_cast<int>(chosen.size()) == dim) break;
        chosen.push_back(pts[i]);
        if (rank_of_vectors(chosen) < static_cast<int>(chosen.size())) {
            chosen.pop_back();
            continue;
        }
        start_cols.push_back(static_cast<int>(s_pts.size()));
        add_pair(i);
    }
    if (static_cast<int>(chosen.size()) < dim) return extreme_point_indices(pts);
    RationalMatrix b(dim, dim);
    for (int c = 0; c < dim; ++c)
        for (int i = 0; i < dim; ++i) b(i, c) = chosen[c][i];
    auto inv = b.inverse();
    if (!inv) return extreme_point_indices(pts);

    for (int i : order) {
        if (in_s[i] || dropped[i]) continue;
        Rational g;
        if (active_set_hull_gauge(s_pts, dim, s_neg, start_cols, *inv, pts[i], g) && g <= 1) {
            dropped[i] = dropped[neg[i]] = 1;
        } else {
            add_pair(i);
        }
    }

    std::vector<char> keep(n, 0);
    for (int k : extreme_point_indices(s_pts)) keep[s_orig[k]] = 1;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (keep[i]) out.push_back(i);
    return out;
}

}  // namespace

Polytope::Polytope(int dim, std::vector<RationalVector> vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ < 1)
        throw contract_error("polytope dimension must be positive");
    if (vertices_.empty())
        throw contract_error("polytope needs at least one vertex");
    for (const auto& v : vertices_)
        if (static_cast<int>(v.size()) != dim_)
            throw contract_error("polytope vertex has wrong dimension");
}

bool Polytope::is_full_dimensional() const {
    std::vector<RationalVector> diffs;
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        diffs.push_back(subtract(vertices_[i], vertices_[0]));
    return rank_of_vectors(diffs) == dim_;
}

RationalVector Polytope::vertex_centroid() const {
    RationalVector c(dim_, Rational(0));
    for (const auto& v : vertices_)
        for (int i = 0; i < dim_; ++i) c[i] += v[i];
    const Rational n(static_cast<unsigned long>(vertices_.size()));
    for (int i = 0; i < dim_; ++i) c[i] /= n;
    return c;
}

std::vector<std::pair<Rational, Rational>> Polytope::bounding_box() const {
    std::vector<std::pair<Rational, Rational>> box(dim_);
    for (int i = 0; i < dim_; ++i) box[i] = {vertices_[0][i], vertices_[0][i]};
    for (const auto& v : vertices_)
        for (int i = 0; i < dim_; ++i) {
            if (v[i] < box[i].first) box[i].first = v[i];
            if (v[i] > box[i].second) box[i].second = v[i];
        }
    return box;
}

Subspace::Subspace(int ambient_dim, std::vector<RationalVector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_dim_ < 1)
        throw contract_error("ambient dimension must be positive");
    for (const auto& v : basis_)
        if (static_cast<int>(v.size()) != ambient_dim_)
            throw contract_error("subspace basis vector has wrong dimension");
    if (rank_of_vectors(basis_) != static_cast<int>(basis_.size()))
        throw contract_error("subspace basis is linearly dependent");
}

Subspace Subspace::span_of(int ambient_dim, const std::vector<RationalVector>& vectors) {
    std::vector<RationalVector> kept;
    for (const auto& v : vectors) {
        kept.push_back(v);
        if (rank_of_vectors(kept) != static_cast<int>(kept.size()))
            kept.pop_back();
    }
    return Subspace(ambient_dim, kept);
}

bool Subspace::contains(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != ambient_dim_)
        throw contract_error("subspace membership dimension mismatch");
    auto augmented = basis_;
    augmented.push_back(x);
    return rank_of_vectors(augmented) == static_cast<int>(basis_.size());
}

RationalVector Subspace::coordinates_of(const RationalVector& x) const {
    const int k = dimension();
    RationalMatrix m(ambient_dim_, k);
    for (int r = 0; r < ambient_dim_; ++r)
        for (int c = 0; c < k; ++c) m(r, c) = basis_[c][r];
    auto sol = solve_linear(m, x);
    if (!sol)
        throw contract_error("vector is not in the subspace");
    return *sol;
}

RationalVector Subspace::from_coordinates(const RationalVector& coords) const {
    if (coords.size() != basis_.size())
        throw contract_error("subspace coordinate length mismatch");
    RationalVector out(ambient_dim_, Rational(0));
    for (std::size_t j = 0; j < basis_.size(); ++j)
        for (int i = 0; i < ambient_dim_; ++i) out[i] += coords[j] * basis_[j][i];
    return out;
}

bool contains(const Polytope& p, const RationalVector& x) {
    if (static_cast<int>(x.size()) != p.dim())
        throw contract_error("membership query dimension mismatch");
    const auto& verts = p.vertices();
    const int n = static_cast<int>(verts.size());
    const int d = p.dim();
    // theta >= 0 with sum(theta) = 1 and sum(theta_i v_i) = x.
    RationalMatrix a(d + 1, n);
    RationalVector rhs(d + 1);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = verts[c][r];
        rhs[r] = x[r];
    }
    for (int c = 0; c < n; ++c) a(d, c) = 1;
    rhs[d] = 1;
    return lp_feasible(a, rhs, std::vector<bool>(n, true));
}

std::vector<int> extreme_point_indices(const std::vector<RationalVector>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<int> result;
    for (int i = 0; i < n; ++i) {
        // Duplicates: only the first occurrence can be reported extreme.
        bool duplicate = false;
        for (int j = 0; j < i && !duplicate; ++j) duplicate = (points[j] == points[i]);
        if (duplicate) continue;
        std::vector<RationalVector> others;
        for (int j = 0; j < n; ++j)
            if (j != i && points[j] != points[i]) others.push_back(points[j]);
        if (others.empty()) {
            result.push_back(i);
            continue;
        }
        const int d = static_cast<int>(points[i].size());
        Polytope hull_of_others(d, others);
        if (!contains(hull_of_others, points[i])) result.push_back(i);
    }
    return result;
}

Polytope difference_body(const Polytope& p) {
    const auto& verts = p.vertices();
    std::vector<RationalVector> diffs;
    diffs.reserve(verts.size() * verts.size());
    for (const auto& v : verts)
        for (const auto& w : verts) diffs.push_back(subtract(v, w));
    std::sort(diffs.begin(), diffs.end(), lex_less);
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    if (p.dim() == 2 && diffs.size() > 3) {
        auto cycle = hull2d(diffs);
        if (cycle.size() >= 3) return Polytope(2, cycle);
    }
    if (diffs.size() > 2) {
        // The difference set is symmetric by construction, so the larger
        // clouds in dimension >= 4 can use the incremental pruner instead of
        // one hull LP per point over the whole cloud.
        auto keep = p.dim() >= 4 ? symmetric_extreme_indices(diffs, p.dim())
                                 : extreme_point_indices(diffs);
        std::vector<RationalVector> pruned;
        pruned.reserve(keep.size());
        for (int i : keep) pruned.push_back(diffs[i]);
        return Polytope(p.dim(), pruned);
    }
    return Polytope(p.dim(), diffs);
}

namespace {

// max t with t*x in D, as an LP over hull coefficients; assumes 0 in D was
// already established, so t = 0 is feasible and "infeasible" cannot happen.
std::optional<Rational> gauge_by_lp(const Polytope& d_body, const RationalVector& x) {
    const auto& verts = d_body.vertices();
    const int n = static_cast<int>(verts.size());
    const int d = d_body.dim();
    RationalMatrix a(d + 1, n + 1);
    RationalVector rhs(d + 1);
    RationalVector obj(n + 1, Rational(0));
    obj[0] = 1;
    for (int r = 0; r < d; ++r) {
        a(r, 0) = -x[r];
        for (int c = 0; c < n; ++c) a(r, c + 1) = verts[c][r];
        rhs[r] = 0;
    }
    for (int c = 0; c < n; ++c) a(d, c + 1) = 1;
    rhs[d] = 1;
    std::vector<bool> nonneg(n + 1, true);
    nonneg[0] = false;
    LpResult res = lp_maximize(obj, a, rhs, nonneg);
    if (res.status == LpStatus::Unbounded)
        return Rational(0);  // only possible for x = 0
    if (res.status == LpStatus::Infeasible)
        throw error("gauge LP infeasible although the body contains the origin");
    if (res.value <= 0)
        return std::nullopt;  // no positive scaling of x reaches D
    return 1 / res.value;
}

}  // namespace

std::optional<Rational> gauge(const Polytope& d_body, const RationalVector& x) {
    if (static_cast<int>(x.size()) != d_body.dim())
        throw contract_error("gauge query dimension mismatch");
    if (!contains(d_body, RationalVector(d_body.dim(), Rational(0))))
        throw contract_error("gauge body does not contain the origin");
    return gauge_by_lp(d_body, x);
}

std::optional<Rational> gauge_of_difference_in_subspace(const Polytope& p, const Subspace& v,
                                                        const RationalVector& x) {
    if (p.dim() != v.ambient_dim())
        throw contract_error("polytope and subspace dimensions differ");
    if (!v.contains(x))
        throw contract_error("gauge direction is not in the subspace");
    const auto& verts = p.vertices();
    const int n = static_cast<int>(verts.size());
    const int d = p.dim();
    const int k = v.dimension();
    // Variables: t (free), alpha_1..alpha_n, beta_1..beta_n (hull coefficients
    // of the pair p = sum alpha_i v_i, q = sum beta_i v_i), s_1..s_k (free,
    // the V-coordinates of p).  Constraints: p - q = t*x, p = B s (so p, and
    // hence q = p - t*x, lies in V), and both coefficient sets sum to 1.
    const int cols = 1 + 2 * n + k;
    RationalMatrix a(2 * d + 2, cols);
    RationalVector rhs(2 * d + 2, Rational(0));
    RationalVector obj(cols, Rational(0));
    obj[0] = 1;
    for (int r = 0; r < d; ++r) {
        a(r, 0) = -x[r];
        for (int c = 0; c < n; ++c) {
            a(r, 1 + c) = verts[c][r];
            a(r, 1 + n + c) = -verts[c][r];
        }
    }
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < n; ++c) a(d + r, 1 + c) = verts[c][r];
        for (int j = 0; j < k; ++j) a(d + r, 1 + 2 * n + j) = -v.basis()[j][r];
    }
    for (int c = 0; c < n; ++c) a(2 * d, 1 + c) = 1;
    rhs[2 * d] = 1;
    for (int c = 0; c < n; ++c) a(2 * d + 1, 1 + n + c) = 1;
    rhs[2 * d + 1] = 1;
    std::vector<bool> nonneg(cols, true);
    nonneg[0] = false;
    for (int j = 0; j < k; ++j) nonneg[1 + 2 * n + j] = false;
    LpResult res = lp_maximize(obj, a, rhs, nonneg);
    if (res.status == LpStatus::Infeasible)
        throw empty_intersection_error("polytope does not meet the subspace");
    if (res.status == LpStatus::Unbounded)
        return Rational(0);  // only for x = 0
    if (res.value <= 0)
        return std::nullopt;
    return 1 / res.value;
}

Polytope translate(const Polytope& p, const RationalVector& t) {
    if (static_cast<int>(t.size()) != p.dim())
        throw contract_error("translation vector dimension mismatch");
    std::vector<RationalVector> moved = p.vertices();
    for (auto& v : moved)
        for (int i = 0; i < p.dim(); ++i) v[i] += t[i];
    return Polytope(p.dim(), std::move(moved));
}

MembershipTester::MembershipTester(Polytope p) : p_(std::move(p)), use_facets_(false) {
    box_ = p_.bounding_box();
    if (p_.dim() <= 3 && p_.is_full_dimensional()) {
        facets_ = facet_inequalities(p_);
        use_facets_ = true;
    }
}

bool MembershipTester::operator()(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != p_.dim())
        throw contract_error("membership query dimension mismatch");
    for (int i = 0; i < p_.dim(); ++i)
        if (x[i] < box_[i].first || x[i] > box_[i].second) return false;
    if (!use_facets_)
        return contains(p_, x);
    for (const auto& f : facets_)
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

GaugeTester::GaugeTester(Polytope d) : d_(std::move(d)), use_facets_(false) {
    if (d_.dim() <= 3 && d_.is_full_dimensional()) {
        facets_ = facet_inequalities(d_);
        for (const auto& f : facets_)
            if (f.offset < 0)
                throw contract_error("gauge body does not contain the origin");
        use_facets_ = true;
        return;
    }
    if (!contains(d_, RationalVector(d_.dim(), Rational(0))))
        throw contract_error("gauge body does not contain the origin");

    // Polar-simplex setup: needs the vertex set closed under negation and a
    // full-dimensional span.  Both hold for difference bodies, the main
    // client; anything else keeps the general LP route.
    const auto& verts = d_.vertices();
    const int dim = d_.dim();
    const int n = static_cast<int>(verts.size());
    if (!d_.is_full_dimensional())
        return;
    negation_of_.assign(n, -1);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            bool neg = true;
            for (int i = 0; i < dim && neg; ++i)
                if (verts[k][i] != -verts[j][i]) neg = false;
            if (neg) {
                negation_of_[j] = k;
                break;
            }
        }
        if (negation_of_[j] < 0) {
            negation_of_.clear();
            return;
        }
    }
    std::vector<RationalVector> chosen;
    for (int j = 0; j < n && static_cast<int>(chosen.size()) < dim; ++j) {
        chosen.push_back(verts[j]);
        if (rank_of_vectors(chosen) < static_cast<int>(chosen.size())) {
            chosen.pop_back();
        } else {
            start_cols_.push_back(j);
        }
    }
    if (static_cast<int>(chosen.size()) != dim)
        return;
    RationalMatrix b(dim, dim);
    for (int c = 0; c < dim; ++c)
        for (int i = 0; i < dim; ++i) b(i, c) = verts[start_cols_[c]][i];
    auto inv = b.inverse();
    if (!inv)
        return;
    start_inverse_ = std::move(*inv);
    use_polar_ = true;
}

bool GaugeTester::polar_gauge(const RationalVector& x, Rational& out) const {
    return active_set_hull_gauge(d_.vertices(), d_.dim(), negation_of_, start_cols_,
                                 start_inverse_, x, out);
}

std::optional<Rational> GaugeTester::operator()(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != d_.dim())
        throw contract_error("gauge query dimension mismatch");
    if (use_facets_) {
        Rational best(0);
        for (const auto& f : facets_) {
            const Rational num = dot(f.normal, x);
            if (f.offset == 0) {
                if (num > 0) return std::nullopt;
                continue;
            }
            const Rational ratio = num / f.offset;
            if (ratio > best) best = ratio;
        }
        return best;
    }
    if (use_polar_) {
        Rational g;
        if (polar_gauge(x, g)) return g;
    }
    return gauge_by_lp(d_, x);
}

}  // namespace gon
