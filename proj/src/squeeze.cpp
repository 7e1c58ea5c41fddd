#include "gon/squeeze.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "gon/errors.hpp"

namespace gon {

namespace {

using FiberPoint = std::pair<Rational, Rational>;  // (w, s)

void check_direction(const RationalVector& direction) {
    if (direction.size() != 2) throw contract_error("direction must be a 2-vector");
    if (direction[0] == 0 && direction[1] == 0) throw contract_error("direction must be nonzero");
}

/*
 * Fiber coordinates (w, s): w = <(v1, -v0), x>, s = <v, x> / <v, v>, so that
 * x = w (v1, -v0) / <v, v> + s v.  The map (w, s) -> x has determinant 1, so
 * shoelace areas and orientations agree with ambient ones, and the fiber at
 * fixed w is the segment s in [bot(w), top(w)] traced along v.
 */
FiberPoint to_fiber_coords(const RationalVector& x, const RationalVector& v) {
    Rational w = v[1] * x[0] - v[0] * x[1];
    Rational s = (v[0] * x[0] + v[1] * x[1]) / (v[0] * v[0] + v[1] * v[1]);
    return {std::move(w), std::move(s)};
}

RationalVector from_fiber_coords(const Rational& w, const Rational& s, const RationalVector& v) {
    Rational norm = v[0] * v[0] + v[1] * v[1];
    return {v[1] * w / norm + s * v[0], -v[0] * w / norm + s * v[1]};
}

/* Fiber endpoints of a polygon cycle at every distinct vertex w-coordinate.
 * Both envelopes are linear between consecutive entries, since each of their
 * breakpoints is the w-coordinate of some vertex.  The scan only assumes the
 * cycle bounds a region whose fibers are single segments, which holds for
 * hull cycles and for the contracted cycles built below. */
struct FiberProfile {
    std::vector<Rational> ws;
    std::vector<Rational> top;
    std::vector<Rational> bot;
};

FiberProfile fiber_profile(const std::vector<RationalVector>& cycle, const RationalVector& v) {
    std::vector<FiberPoint> pts;
    pts.reserve(cycle.size());
    for (const auto& x : cycle) pts.push_back(to_fiber_coords(x, v));

    FiberProfile out;
    for (const auto& p : pts) out.ws.push_back(p.first);
    std::sort(out.ws.begin(), out.ws.end());
    out.ws.erase(std::unique(out.ws.begin(), out.ws.end()), out.ws.end());

    for (const auto& w : out.ws) {
        std::optional<Rational> lo, hi;
        auto take = [&](const Rational& s) {
            if (!lo || s < *lo) lo = s;
            if (!hi || s > *hi) hi = s;
        };
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            const auto& q = pts[(i + 1) % pts.size()];
            if (!((p.first <= w && w <= q.first) || (q.first <= w && w <= p.first))) continue;
            if (p.first == q.first) {
                take(p.second);
                take(q.second);
            } else {
                Rational t = (w - p.first) / (q.first - p.first);
                take(p.second + t * (q.second - p.second));
            }
        }
        out.bot.push_back(*lo);
        out.top.push_back(*hi);
    }
    return out;
}

Rational max_fiber_of_profile(const FiberProfile& f) {
    Rational best(0);
    for (std::size_t i = 0; i < f.ws.size(); ++i) {
        Rational len = f.top[i] - f.bot[i];
        if (len > best) best = std::move(len);
    }
    return best;
}

/* Drop chain points that are convex combinations of their neighbors, so the
 * reported vertex cycle has one point per actual envelope breakpoint. */
void prune_collinear(std::vector<FiberPoint>& chain) {
    std::vector<FiberPoint> out;
    for (auto& p : chain) {
        while (out.size() >= 2) {
            const FiberPoint& a = out[out.size() - 2];
            const FiberPoint& b = out.back();
            Rational cross = (b.first - a.first) * (p.second - a.second) -
                             (b.second - a.second) * (p.first - a.first);
            if (cross != 0) break;
            out.pop_back();
        }
        out.push_back(std::move(p));
    }
    chain = std::move(out);
}

}  // namespace

Rational max_fiber_length(const Polytope& polygon, const RationalVector& direction) {
    if (polygon.dim() != 2)
        throw unsupported_dimension_error("fiber decomposition needs a polygon");
    check_direction(direction);
    return max_fiber_of_profile(fiber_profile(hull2d(polygon.vertices()), direction));
}

SqueezeResult squeeze_polygon(const Polytope& k, const Polytope& a,
                              const RationalVector& direction, const Rational& mu) {
    if (k.dim() != 2 || a.dim() != 2)
        throw unsupported_dimension_error("squeezing is implemented for polygons");
    check_direction(direction);
    if (mu <= 0 || mu > 1) throw contract_error("mu must lie in (0, 1]");
    if (!a.is_full_dimensional()) throw contract_error("inner polygon is degenerate");
    MembershipTester in_outer(k);
    for (const auto& v : a.vertices())
        if (!in_outer(v)) throw contract_error("inner polygon is not contained in the outer one");

    auto cycle = hull2d(a.vertices());
    FiberProfile f = fiber_profile(cycle, direction);

    // Contracted envelopes share the breakpoint set of the originals.  Mixing
    // the concave top with the convex bot can put kinks of either envelope
    // into the other, so the contracted region need not be convex; it is
    // returned as an explicit boundary cycle, never re-hulled.
    const Rational toward = (1 + mu) / 2;
    const Rational away = (1 - mu) / 2;
    std::vector<FiberPoint> lower, upper;
    for (std::size_t i = 0; i < f.ws.size(); ++i) {
        lower.push_back({f.ws[i], away * f.top[i] + toward * f.bot[i]});
        upper.push_back({f.ws[i], toward * f.top[i] + away * f.bot[i]});
    }
    prune_collinear(lower);
    prune_collinear(upper);

    std::vector<FiberPoint> loop = lower;
    for (auto it = upper.rbegin(); it != upper.rend(); ++it)
        if (*it != loop.front() && *it != loop.back()) loop.push_back(*it);

    std::vector<RationalVector> contracted;
    contracted.reserve(loop.size());
    for (const auto& p : loop)
        contracted.push_back(from_fiber_coords(p.first, p.second, direction));

    // Both certificates are recomputed from the contracted cycle itself; the
    // exact identities against mu * (A quantities) are checked by callers,
    // not assumed here.
    Polytope a_prime(2, std::move(contracted));
    Rational area_prime = polygon_area(a_prime.vertices());
    Rational max_fiber_prime = max_fiber_of_profile(fiber_profile(a_prime.vertices(), direction));
    SqueezeResult result{std::move(a_prime),
                         mu,
                         direction,
                         polygon_area(cycle),
                         std::move(area_prime),
                         max_fiber_of_profile(f),
                         std::move(max_fiber_prime)};
    return result;
}

bool verify_difference_containment(const SqueezeResult& result, const Polytope& a) {
    return result.max_fiber_a_prime <= result.mu * max_fiber_length(a, result.direction);
}

std::string polygon_cycle_text(const std::vector<RationalVector>& cycle) {
    std::string out;
    for (const auto& p : cycle) {
        if (p.size() != 2) throw contract_error("cycle output needs 2-dimensional points");
        out += to_string(p[0]) + " " + to_string(p[1]) + "\n";
    }
    return out;
}

}  // namespace gon
