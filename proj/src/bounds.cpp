#include "gon/bounds.hpp"

#include <algorithm>

#include "gon/errors.hpp"

namespace gon {

BoundValue BoundValue::exact(Rational v) {
    BoundValue b;
    b.exact_ = std::move(v);
    return b;
}

BoundValue BoundValue::enclosed(Interval i) {
    BoundValue b;
    b.interval_ = std::move(i);
    return b;
}

const Rational& BoundValue::value() const {
    if (!exact_) throw contract_error("bound value is not exact");
    return *exact_;
}

const Interval& BoundValue::enclosure() const {
    if (!interval_) throw contract_error("bound value is not an enclosure");
    return *interval_;
}

Interval BoundValue::as_interval() const {
    if (exact_) return Interval::point(*exact_);
    return *interval_;
}

std::string to_string(const BoundValue& b) {
    return b.is_exact() ? to_string(b.value()) : to_string(b.enclosure());
}

namespace {

Rational floor_factor(const Rational& lambda) {
    return Rational(floor_rational(Rational(2) / lambda + 1));
}

/* Number of leading minima a reduced product runs over: all of them without
 * the reduction, otherwise the relevant k; applicable=false when the
 * reduction is requested but no index qualifies. */
int reduced_count(const MinimaProfile& p, bool symmetric, bool use_k_reduction, bool& applicable) {
    if (!use_k_reduction) {
        applicable = p.dim() > 0;
        return p.dim();
    }
    auto k = symmetric ? p.k_sym : p.k_asym;
    applicable = k.has_value();
    return applicable ? *k : 0;
}

/* Resolved shape of a malikiosis-type value, (4/e) * c^exponent * prefactor,
 * kept symbolic so comparisons can re-evaluate it at any precision and detect
 * structurally identical values. */
struct MalikForm {
    bool symmetric;
    int exponent;
    Rational prefactor;

    Interval eval(const Rational& precision) const {
        Interval four_over_e = enclose_constant(ConstantName::FourOverE, precision);
        Interval c = enclose_constant(symmetric ? ConstantName::Cbrt40Over9 : ConstantName::Sqrt3,
                                      precision);
        return four_over_e * pow(c, exponent) * prefactor;
    }

    bool same_value_as(const MalikForm& other) const {
        if (exponent != other.exponent || prefactor != other.prefactor) return false;
        return symmetric == other.symmetric || exponent == 0;
    }
};

std::optional<MalikForm> malik_form(const MinimaProfile& p, bool symmetric, bool use_k_reduction) {
    bool applicable = false;
    int n = reduced_count(p, symmetric, use_k_reduction, applicable);
    if (!applicable) return std::nullopt;
    Rational prod(1);
    for (int i = 0; i < n; ++i) prod *= floor_factor(p.lambdas[i]);
    return MalikForm{symmetric, n - 1, prod};
}

bool capped_applicable(const MinimaProfile& p) {
    // some lambda_i in (1, 2] exists
    return p.k_asym.has_value() && *p.k_asym > p.k_sym.value_or(0);
}

std::optional<int> theorem_k(const MinimaProfile& p, bool symmetric) {
    return symmetric ? p.k_sym : p.k_asym;
}

}  // namespace

BoundValue conjecture_bound(const MinimaProfile& profile) {
    Rational prod(1);
    for (const auto& l : profile.lambdas) prod *= floor_factor(l);
    return BoundValue::exact(prod);
}

std::optional<BoundValue> malikiosis_bound(const MinimaProfile& profile, bool symmetric,
                                           bool use_k_reduction) {
    return malikiosis_bound(profile, symmetric, use_k_reduction, default_interval_precision());
}

std::optional<BoundValue> malikiosis_bound(const MinimaProfile& profile, bool symmetric,
                                           bool use_k_reduction, const Rational& precision) {
    auto form = malik_form(profile, symmetric, use_k_reduction);
    if (!form) return std::nullopt;
    return BoundValue::enclosed(form->eval(precision));
}

std::optional<BoundValue> freyer_lucas_bound(const MinimaProfile& profile, bool use_k_reduction) {
    bool applicable = false;
    int n = reduced_count(profile, false, use_k_reduction, applicable);
    if (!applicable) return std::nullopt;
    Rational prod(1);
    for (int i = 0; i < n; ++i) prod *= Rational(2) / profile.lambdas[i] + n;
    return BoundValue::exact(prod);
}

std::optional<BoundValue> parametric_bound(const MinimaProfile& profile, const MuChoice& mu,
                                           bool symmetric) {
    auto kopt = theorem_k(profile, symmetric);
    if (!kopt) return std::nullopt;
    const int k = *kopt;
    if (static_cast<int>(mu.mus.size()) != k)
        throw contract_error("mu must have exactly k entries");
    for (int i = 0; i < k; ++i) {
        if (mu.mus[i] <= 0) throw contract_error("mu entries must be positive");
        if (i > 0 && mu.mus[i] < mu.mus[i - 1]) throw contract_error("mu must be nondecreasing");
        if (mu.mus[i] > profile.lambdas[i]) throw contract_error("mu_i must not exceed lambda_i");
    }
    Rational top = pow_rational(Rational(2), k) * pow_rational(1 + mu.mus[k - 1] / 2, k);
    Rational bottom(1);
    for (const auto& m : mu.mus) bottom *= m;
    return BoundValue::exact(top / bottom);
}

std::optional<MuChoice> capped_bound_mu(const MinimaProfile& profile) {
    if (!capped_applicable(profile)) return std::nullopt;
    MuChoice mu;
    for (int i = 0; i < *profile.k_asym; ++i)
        mu.mus.push_back(std::min(profile.lambdas[i], Rational(1)));
    return mu;
}

std::optional<BoundValue> capped_bound(const MinimaProfile& profile) {
    if (!capped_applicable(profile)) return std::nullopt;
    const int m = *profile.k_asym;
    Rational denom(1);
    for (int i = 0; i < profile.k_sym.value_or(0); ++i) denom *= profile.lambdas[i];
    return BoundValue::exact(pow_rational(Rational(3), m) / denom);
}

std::optional<std::pair<MuChoice, BoundValue>> optimal_mu(const MinimaProfile& profile,
                                                          bool symmetric) {
    auto kopt = theorem_k(profile, symmetric);
    if (!kopt) return std::nullopt;
    const int k = *kopt;
    const auto& l = profile.lambdas;

    std::vector<Rational> candidates(l.begin(), l.begin() + k);
    // With mu_i = min(lambda_i, t) and j = #{i : lambda_i >= t} constant on
    // the piece (lambda_{s-1}, lambda_s], the only interior critical point of
    // t -> 2^k (1+t/2)^k / (prod_{i<s} lambda_i * t^j) is t = 2j/(k-j);
    // on the first piece (j = k) the value is strictly decreasing.
    for (int s = 1; s < k; ++s) {
        if (l[s - 1] == l[s]) continue;
        int j = k - s;
        Rational critical = Rational(2 * j) / s;
        if (l[s - 1] < critical && critical <= l[s]) candidates.push_back(critical);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::optional<Rational> best_value;
    MuChoice best_mu;
    for (const auto& t : candidates) {
        MuChoice mu;
        for (int i = 0; i < k; ++i) mu.mus.push_back(std::min(l[i], t));
        Rational value = parametric_bound(profile, mu, symmetric)->value();
        if (!best_value || value < *best_value) {
            best_value = value;
            best_mu = std::move(mu);
        }
    }
    return std::make_pair(std::move(best_mu), BoundValue::exact(std::move(*best_value)));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::StrictlyLess: return "strictly-less";
        case Verdict::Equal: return "equal";
        case Verdict::StrictlyGreater: return "strictly-greater";
        case Verdict::Indeterminate: break;
    }
    return "indeterminate";
}

Verdict compare_bound_values(const BoundValue& a, const BoundValue& b) {
    if (a.is_exact() && b.is_exact()) {
        int c = cmp(a.value(), b.value());
        if (c < 0) return Verdict::StrictlyLess;
        if (c > 0) return Verdict::StrictlyGreater;
        return Verdict::Equal;
    }
    auto c = compare(a.as_interval(), b.as_interval());
    if (!c) return Verdict::Indeterminate;
    return *c < 0 ? Verdict::StrictlyLess : Verdict::StrictlyGreater;
}

std::vector<NamedBound> standard_bounds(const MinimaProfile& profile, bool symmetric,
                                        bool use_k_reduction) {
    std::vector<NamedBound> out;
    out.push_back({"conjecture", conjecture_bound(profile)});
    out.push_back({"malikiosis", malikiosis_bound(profile, false, use_k_reduction)});
    out.push_back({"malikiosis-sym",
                   symmetric ? malikiosis_bound(profile, true, use_k_reduction) : std::nullopt});
    out.push_back({"freyer-lucas", freyer_lucas_bound(profile, use_k_reduction)});

    auto kopt = theorem_k(profile, symmetric);
    std::optional<BoundValue> mu_lambda;
    if (kopt) {
        MuChoice mu;
        mu.mus.assign(profile.lambdas.begin(), profile.lambdas.begin() + *kopt);
        mu_lambda = parametric_bound(profile, mu, symmetric);
    }
    out.push_back({"parametric-mu-lambda", mu_lambda});

    auto opt = optimal_mu(profile, symmetric);
    out.push_back({"parametric-optimal",
                   opt ? std::optional<BoundValue>(opt->second) : std::nullopt});
    out.push_back({"capped", capped_bound(profile)});
    return out;
}

std::vector<BoundComparison> compare_bounds(const MinimaProfile& profile, bool symmetric) {
    struct Entry {
        std::string name;
        std::optional<Rational> exact;
        std::optional<MalikForm> malik;
    };
    std::vector<Entry> entries;
    auto add_exact = [&](const char* name, const std::optional<BoundValue>& b) {
        if (b) entries.push_back({name, b->value(), std::nullopt});
    };

    add_exact("conjecture", conjecture_bound(profile));
    if (auto f = malik_form(profile, false, false))
        entries.push_back({"malikiosis", std::nullopt, *f});
    if (symmetric)
        if (auto f = malik_form(profile, true, false))
            entries.push_back({"malikiosis-sym", std::nullopt, *f});
    add_exact("freyer-lucas", freyer_lucas_bound(profile, false));
    if (auto kopt = theorem_k(profile, symmetric)) {
        MuChoice mu;
        mu.mus.assign(profile.lambdas.begin(), profile.lambdas.begin() + *kopt);
        add_exact("parametric-mu-lambda", parametric_bound(profile, mu, symmetric));
    }
    if (auto opt = optimal_mu(profile, symmetric))
        add_exact("parametric-optimal", opt->second);
    add_exact("capped", capped_bound(profile));

    const Rational floor_precision = inverse_power_of_ten(60);
    std::vector<BoundComparison> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const Entry& a = entries[i];
            const Entry& b = entries[j];
            Verdict verdict = Verdict::Indeterminate;
            if (a.exact && b.exact) {
                verdict = compare_bound_values(BoundValue::exact(*a.exact),
                                               BoundValue::exact(*b.exact));
            } else if (a.malik && b.malik && a.malik->same_value_as(*b.malik)) {
                verdict = Verdict::Equal;
            } else {
                Rational precision = default_interval_precision();
                while (true) {
                    BoundValue va = a.exact ? BoundValue::exact(*a.exact)
                                            : BoundValue::enclosed(a.malik->eval(precision));
                    BoundValue vb = b.exact ? BoundValue::exact(*b.exact)
                                            : BoundValue::enclosed(b.malik->eval(precision));
                    verdict = compare_bound_values(va, vb);
                    if (verdict != Verdict::Indeterminate) break;
                    precision /= 2;
                    if (precision < floor_precision) break;
                }
            }
            out.push_back({a.name, b.name, verdict});
        }
    }
    return out;
}

}  // namespace gon
