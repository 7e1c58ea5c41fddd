#include <algorithm>

#include "gon/errors.hpp"
#include "gon/polytope.hpp"

namespace gon {

namespace {

Rational cross2(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

RationalVector cross3(const RationalVector& a, const RationalVector& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Rational det3(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

std::vector<RationalVector> hull2d(const std::vector<RationalVector>& points) {
    for (const auto& p : points)
        if (p.size() != 2)
            throw contract_error("hull2d expects 2-dimensional points");
    std::vector<RationalVector> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<RationalVector> hull(2 * n);
    std::size_t k = 0;
    // Lower hull, then upper hull; strict left turns only, so collinear
    // interior points are dropped and every output vertex is extreme.
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i > 0; --i) {
        while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

Rational polygon_area(const std::vector<RationalVector>& cycle) {
    if (cycle.size() < 3) return Rational(0);
    Rational twice(0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % cycle.size()];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    if (twice < 0) twice = -twice;
    return twice / 2;
}

namespace {

std::vector<Facet> facets_1d(const Polytope& p) {
    auto box = p.bounding_box();
    return {{{Rational(1)}, box[0].second}, {{Rational(-1)}, -box[0].first}};
}

std::vector<Facet> facets_2d(const Polytope& p) {
    auto cycle = hull2d(p.vertices());
    std::vector<Facet> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % cycle.size()];
        // Counterclockwise cycle: the right-hand normal of each edge points out.
        RationalVector normal = {b[1] - a[1], a[0] - b[0]};
        out.push_back({normal, dot(normal, a)});
    }
    return out;
}

void canonicalize_facet(Facet& f) {
    for (const auto& c : f.normal) {
        if (c != 0) {
            Rational scale = c < 0 ? -c : c;
            for (auto& x : f.normal) x /= scale;
            f.offset /= scale;
            return;
        }
    }
}

std::vector<Facet> facets_3d(const Polytope& p) {
    std::vector<RationalVector> verts = p.vertices();
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const std::size_t n = verts.size();
    std::vector<Facet> found;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                RationalVector normal = cross3(subtract(verts[j], verts[i]),
                                               subtract(verts[k], verts[i]));
                if (normal[0] == 0 && normal[1] == 0 && normal[2] == 0) continue;
                const Rational offset = dot(normal, verts[i]);
                bool above = false, below = false;
                for (std::size_t t = 0; t < n && !(above && below); ++t) {
                    const Rational side = dot(normal, verts[t]);
                    if (side > offset) above = true;
                    else if (side < offset) below = true;
                }
                if (!above) {
                    Facet f{normal, offset};
                    canonicalize_facet(f);
                    found.push_back(std::move(f));
                }
                if (!below) {
                    RationalVector neg = {-normal[0], -normal[1], -normal[2]};
                    Facet f{neg, -offset};
                    canonicalize_facet(f);
                    found.push_back(std::move(f));
                }
            }
    auto facet_less = [](const Facet& a, const Facet& b) {
        if (lex_less(a.normal, b.normal)) return true;
        if (lex_less(b.normal, a.normal)) return false;
        return a.offset < b.offset;
    };
    auto facet_eq = [](const Facet& a, const Facet& b) {
        return a.normal == b.normal && a.offset == b.offset;
    };
    std::sort(found.begin(), found.end(), facet_less);
    found.erase(std::unique(found.begin(), found.end(), facet_eq), found.end());
    return found;
}

}  // namespace

std::vector<Facet> facet_inequalities(const Polytope& p) {
    if (p.dim() > 3)
        throw unsupported_dimension_error("facet enumeration implemented for dimension <= 3");
    if (!p.is_full_dimensional())
        throw degenerate_body_error("facet enumeration needs a full-dimensional polytope");
    switch (p.dim()) {
        case 1: return facets_1d(p);
        case 2: return facets_2d(p);
        default: return facets_3d(p);
    }
}

namespace {

Rational volume_3d(const Polytope& p) {
    std::vector<RationalVector> verts = p.vertices();
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const RationalVector c = p.vertex_centroid();
    Rational six_volume(0);
    for (const auto& f : facets_3d(p)) {
        // Vertices on this facet, ordered by a 2-D hull of their projection
        // onto the coordinate plane least perpendicular to the facet.
        std::vector<RationalVector> on_face;
        for (const auto& v : verts)
            if (dot(f.normal, v) == f.offset) on_face.push_back(v);
        int drop = 0;
        Rational best = f.normal[0] < 0 ? -f.normal[0] : f.normal[0];
        for (int axis = 1; axis < 3; ++axis) {
            Rational mag = f.normal[axis] < 0 ? -f.normal[axis] : f.normal[axis];
            if (mag > best) {
                best = mag;
                drop = axis;
            }
        }
        std::vector<RationalVector> flat;
        for (const auto& v : on_face) {
            RationalVector q;
            for (int axis = 0; axis < 3; ++axis)
                if (axis != drop) q.push_back(v[axis]);
            flat.push_back(q);
        }
        auto cycle2 = hull2d(flat);
        std::vector<RationalVector> cycle3;
        for (const auto& q : cycle2)
            for (const auto& v : on_face) {
                RationalVector proj;
                for (int axis = 0; axis < 3; ++axis)
                    if (axis != drop) proj.push_back(v[axis]);
                if (proj == q) {
                    cycle3.push_back(v);
                    break;
                }
            }
        for (std::size_t i = 1; i + 1 < cycle3.size(); ++i) {
            Rational piece = det3(subtract(cycle3[0], c), subtract(cycle3[i], c),
                                  subtract(cycle3[i + 1], c));
            if (piece < 0) piece = -piece;
            six_volume += piece;
        }
    }
    return six_volume / 6;
}

}  // namespace

Rational volume_exact(const Polytope& p) {
    if (p.dim() > 3)
        throw unsupported_dimension_error("exact volume implemented for dimension <= 3");
    if (!p.is_full_dimensional())
        throw degenerate_body_error("exact volume needs a full-dimensional polytope");
    switch (p.dim()) {
        case 1: {
            auto box = p.bounding_box();
            return box[0].second - box[0].first;
        }
        case 2:
            return polygon_area(hull2d(p.vertices()));
        default:
            return volume_3d(p);
    }
}

}  // namespace gon
