#include <algorithm>
#include <cstdlib>
#include <map>

#include "gon/errors.hpp"
#include "gon/lattice.hpp"

namespace gon {

namespace {

constexpr long kRoundBoxLimit = 200000000;
const long kRadiusCap = 1 << 20;

void fill_k_indices(MinimaProfile& profile) {
    profile.k_sym.reset();
    profile.k_asym.reset();
    for (int i = 0; i < static_cast<int>(profile.lambdas.size()); ++i) {
        if (profile.lambdas[i] <= 1) profile.k_sym = i + 1;
        if (profile.lambdas[i] <= 2) profile.k_asym = i + 1;
    }
}

}  // namespace

MinimaProfile MinimaProfile::from_lambdas(std::vector<Rational> lambdas) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] <= 0)
            throw contract_error("successive minima must be positive");
        if (i > 0 && lambdas[i] < lambdas[i - 1])
            throw contract_error("successive minima must be nondecreasing");
    }
    MinimaProfile profile;
    profile.lambdas = std::move(lambdas);
    fill_k_indices(profile);
    return profile;
}

MinimaProfile MinimaProfile::scaled(const Rational& factor) const {
    if (factor <= 0)
        throw contract_error("scale factor must be positive");
    MinimaProfile out;
    out.lambdas.reserve(lambdas.size());
    for (const auto& l : lambdas) out.lambdas.push_back(l * factor);
    out.witnesses.reserve(witnesses.size());
    for (const auto& w : witnesses) {
        RationalVector scaled_w(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) scaled_w[i] = w[i] * factor;
        out.witnesses.push_back(std::move(scaled_w));
    }
    fill_k_indices(out);
    return out;
}

namespace {

// Lattice coordinates fit in long: the round guard keeps every axis of the
// candidate box below kRoundBoxLimit, so the scan runs on machine integers
// and only promotes to rationals once a candidate survives the prefilters.
struct PoolEntry {
    Rational gauge;
    std::vector<long> z;
    RationalVector ambient;
};

// Ties in gauge are broken toward the smallest coordinate magnitudes so the
// witnesses come out as the expected unit vectors on highly symmetric inputs;
// residual ties fall back to plain lexicographic order.  Either way the
// minima values are unaffected and the witnesses are deterministic.
bool pool_order(const PoolEntry& a, const PoolEntry& b) {
    if (a.gauge != b.gauge) return a.gauge < b.gauge;
    for (std::size_t i = 0; i < a.z.size(); ++i) {
        long aa = std::abs(a.z[i]);
        long ab = std::abs(b.z[i]);
        if (aa != ab) return aa < ab;
    }
    return std::lexicographical_compare(a.z.begin(), a.z.end(), b.z.begin(), b.z.end());
}

}  // namespace

MinimaProfile successive_minima(const Polytope& k, const LatticeBasis& l) {
    if (k.dim() != l.dim())
        throw contract_error("polytope and lattice dimensions differ");
    const int d = k.dim();
    if (d == 0) return MinimaProfile{};
    if (!k.is_full_dimensional())
        throw degenerate_body_error("successive minima need a full-dimensional body");

    Polytope diff = difference_body(k);
    GaugeTester gauge_of(diff);

    // Per-axis bounds: a point of gauge <= t has lattice coordinates in the
    // box |z_i| <= t * H_i (H from the difference body's vertices, which is
    // symmetric), and ambient coordinates |x_i| <= t * W_i.  The W bound is
    // a cheap prefilter before the linear-program gauge in dimension >= 4.
    std::vector<Rational> h(d, Rational(0)), w(d, Rational(0));
    std::vector<RationalVector> diff_z;
    diff_z.reserve(diff.vertices().size());
    for (const auto& vertex : diff.vertices()) {
        RationalVector z = l.to_lattice_coords(vertex);
        for (int i = 0; i < d; ++i) {
            Rational az = abs(z[i]);
            if (az > h[i]) h[i] = az;
            Rational av = abs(vertex[i]);
            if (av > w[i]) w[i] = av;
        }
        diff_z.push_back(std::move(z));
    }

    // Sign-pattern slabs: for every sign vector s (first entry +1), the
    // functional sum s_i z_i is at most t * max over the difference body, so
    // |s . z| > t * m_s rejects a candidate with a handful of integer
    // additions.  This prunes the box corners, which is where nearly all of
    // the d >= 4 linear-program calls would otherwise go.
    std::vector<std::vector<int>> slab_signs;
    std::vector<Rational> slab_max;
    if (d >= 4) {
        const int patterns = 1 << (d - 1);
        for (int mask = 0; mask < patterns; ++mask) {
            std::vector<int> s(d, 1);
            for (int i = 1; i < d; ++i)
                if (mask & (1 << (i - 1))) s[i] = -1;
            Rational m(0);
            for (const auto& z : diff_z) {
                Rational dot(0);
                for (int i = 0; i < d; ++i) dot += s[i] > 0 ? z[i] : -z[i];
                Rational a = abs(dot);
                if (a > m) m = a;
            }
            slab_signs.push_back(std::move(s));
            slab_max.push_back(std::move(m));
        }
    }

    auto box_count = [&](const Rational& t) {
        Integer total = 1;
        for (int i = 0; i < d; ++i) {
            Integer b = floor_rational(t * h[i]);
            total *= 2 * b + 1;
        }
        return total;
    };

    // The search threshold doubles until the profile is complete.  Starting
    // below 1 when the unit box is already large keeps early rounds small
    // without changing the result: every round sees all points of gauge <= t.
    Rational t(1);
    {
        Rational floor_t(1, kRadiusCap);
        while (t > floor_t && box_count(t) > 1024) t /= 2;
    }

    // Exact gauges computed so far, including those above the current
    // threshold: a vector inspected once is never sent to the gauge solver
    // again in later rounds.
    std::map<std::vector<long>, PoolEntry> pool;
    std::vector<PoolEntry> selected;
    std::vector<RationalVector> selected_coords;

    while (true) {
        if (t > kRadiusCap)
            throw resource_limit_error("successive minima search exceeded the radius cap 2^20");
        Integer candidates = box_count(t);
        if (candidates > kRoundBoxLimit)
            throw resource_limit_error("successive minima candidate box exceeds " +
                                       std::to_string(kRoundBoxLimit) + " points");

        std::vector<long> lo(d), hi(d);
        for (int i = 0; i < d; ++i) {
            hi[i] = floor_rational(t * h[i]).get_si();
            lo[i] = -hi[i];
        }
        // An integer point is in the slab |s . z| <= t * m exactly when
        // |s . z| <= floor(t * m), so each slab collapses to a long bound.
        std::vector<long> slab_cap(slab_signs.size());
        for (std::size_t p = 0; p < slab_signs.size(); ++p)
            slab_cap[p] = floor_rational(t * slab_max[p]).get_si();

        std::vector<long> z = lo;
        while (true) {
            // Sign canonicalization: first nonzero coordinate positive, so
            // each +-pair of lattice vectors is inspected once.
            int first_nonzero = -1;
            for (int i = 0; i < d; ++i)
                if (z[i] != 0) {
                    first_nonzero = i;
                    break;
                }
            bool plausible = first_nonzero >= 0 && z[first_nonzero] > 0;
            for (std::size_t p = 0; p < slab_signs.size() && plausible; ++p) {
                long dot = 0;
                for (int i = 0; i < d; ++i)
                    dot += slab_signs[p][i] > 0 ? z[i] : -z[i];
                if (std::abs(dot) > slab_cap[p]) plausible = false;
            }
            if (plausible && pool.find(z) == pool.end()) {
                RationalVector zq(d);
                for (int i = 0; i < d; ++i) zq[i] = Rational(z[i]);
                RationalVector x = l.from_lattice_coords(zq);
                if (d >= 4) {
                    for (int i = 0; i < d && plausible; ++i)
                        if (abs(x[i]) > t * w[i]) plausible = false;
                }
                if (plausible) {
                    auto g = gauge_of(x);
                    if (g) pool.emplace(z, PoolEntry{*g, z, std::move(x)});
                }
            }
            int axis = d - 1;
            while (axis >= 0) {
                if (z[axis] < hi[axis]) {
                    ++z[axis];
                    break;
                }
                z[axis] = lo[axis];
                --axis;
            }
            if (axis < 0) break;
        }

        std::vector<PoolEntry> ordered;
        ordered.reserve(pool.size());
        for (const auto& [key, entry] : pool)
            if (entry.gauge <= t) ordered.push_back(entry);
        std::sort(ordered.begin(), ordered.end(), pool_order);

        selected.clear();
        selected_coords.clear();
        for (const auto& entry : ordered) {
            if (static_cast<int>(selected.size()) == d) break;
            RationalVector zq(d);
            for (int i = 0; i < d; ++i) zq[i] = Rational(entry.z[i]);
            selected_coords.push_back(zq);
            if (rank_of_vectors(selected_coords) == static_cast<int>(selected_coords.size())) {
                selected.push_back(entry);
            } else {
                selected_coords.pop_back();
            }
        }
        if (static_cast<int>(selected.size()) == d) break;
        t *= 2;
    }

    MinimaProfile profile;
    for (const auto& entry : selected) {
        profile.lambdas.push_back(entry.gauge * 2);
        profile.witnesses.push_back(entry.ambient);
    }
    fill_k_indices(profile);
    return profile;
}

}  // namespace gon
