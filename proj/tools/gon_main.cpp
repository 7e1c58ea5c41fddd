// Command-line front end: minima, count, bounds, campaign, squeeze.
//
// Exit codes are a stable contract:
//   0  success
//   1  a certified bound was violated (counterexample emitted)
//   2  input did not parse (files, arguments, wrong dimensionality)
//   3  degenerate body where a full-dimensional one is required
//   4  invalid mu parameter
//   5  inner polygon not contained in the outer one
//
// All numeric output is exact rational text; the only decimals appear in
// interval renderings, tagged "~=" next to the exact endpoints.  The default
// interval precision is 1e-12 and can be overridden through the
// GON_INTERVAL_PRECISION environment variable.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gon/bounds.hpp"
#include "gon/errors.hpp"
#include "gon/harness.hpp"
#include "gon/io.hpp"
#include "gon/lattice.hpp"
#include "gon/polytope.hpp"
#include "gon/squeeze.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitBadMu = 4;
constexpr int kExitContainment = 5;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

int cmd_minima(const std::string& path) {
    gon::Instance inst = gon::load_instance_file(path);
    gon::MinimaProfile profile = gon::successive_minima(inst.body, inst.lattice);
    std::cout << "lambda: ";
    for (std::size_t i = 0; i < profile.lambdas.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << gon::to_string(profile.lambdas[i]);
    }
    std::cout << "\n";
    for (const auto& w : profile.witnesses) {
        std::cout << "witness:";
        for (const auto& c : w) std::cout << ' ' << gon::to_string(c);
        std::cout << "\n";
    }
    std::cout << "k-sym: ";
    if (profile.k_sym)
        std::cout << *profile.k_sym;
    else
        std::cout << "none";
    std::cout << "\nk-asym: ";
    if (profile.k_asym)
        std::cout << *profile.k_asym;
    else
        std::cout << "none";
    std::cout << "\n";
    return 0;
}

int cmd_count(const std::string& path) {
    gon::Instance inst = gon::load_instance_file(path);
    std::cout << gon::count_lattice_points(inst.body, inst.lattice) << "\n";
    return 0;
}

int cmd_bounds(const std::string& path, const std::string& mu_mode, bool k_reduce) {
    gon::Instance inst = gon::load_instance_file(path);

    std::optional<gon::BoundReport> report;
    try {
        report = gon::certify_instance(inst);
    } catch (const gon::bound_violation_error& e) {
        std::cout << "violation: " << e.what() << "\n" << e.dump();
        return kExitViolation;
    }
    std::cout << gon::emit_report_text(*report, k_reduce);

    if (mu_mode == "auto") {
        auto best = gon::optimal_mu(report->minima, inst.symmetric);
        std::cout << "selected-mu: ";
        if (best) {
            for (std::size_t i = 0; i < best->first.mus.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << gon::to_string(best->first.mus[i]);
            }
        } else {
            std::cout << "none";
        }
        std::cout << "\n";
    } else if (mu_mode != "lambda") {
        // Explicit comma-separated mu list.
        gon::MuChoice mu;
        try {
            for (const auto& token : split(mu_mode, ','))
                mu.mus.push_back(gon::parse_rational(token));
        } catch (const gon::parse_error& e) {
            std::cerr << "invalid mu: " << e.what() << "\n";
            return kExitBadMu;
        }
        std::optional<gon::BoundValue> value;
        try {
            value = gon::parametric_bound(report->minima, mu, inst.symmetric);
        } catch (const gon::contract_error& e) {
            std::cerr << "invalid mu: " << e.what() << "\n";
            return kExitBadMu;
        }
        std::cout << "explicit-mu: " << mu_mode << "\n";
        if (value) {
            const bool satisfied = gon::Rational(report->count) <= value->value();
            std::cout << "bound: parametric-explicit value=" << gon::to_string(value->value())
                      << " applicable=yes satisfied=" << (satisfied ? "yes" : "no") << "\n";
            if (!satisfied) return kExitViolation;
        } else {
            std::cout << "bound: parametric-explicit value=- applicable=no satisfied=yes\n";
        }
    }
    return 0;
}

int cmd_campaign(int trials, const std::string& dims_text, std::uint64_t seed,
                 const std::string& ratio_text, int magnitude, const std::string& out_path) {
    gon::CampaignOptions options;
    options.trials = trials;
    for (const auto& token : split(dims_text, ','))
        options.dimensions.push_back(static_cast<int>(std::stol(token)));
    options.seed = seed;
    options.symmetric_ratio = gon::parse_rational(ratio_text);
    options.magnitude = magnitude;

    gon::CampaignSummary summary;
    try {
        summary = gon::run_campaign(options);
    } catch (const gon::bound_violation_error& e) {
        const std::string dump_path = out_path + ".counterexample";
        std::ofstream dump(dump_path);
        dump << e.dump();
        std::cout << "violation: " << e.what() << "\n";
        std::cout << "counterexample: " << dump_path << "\n";
        return kExitViolation;
    }

    const std::string text = gon::emit_campaign_text(summary);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write summary file '" << out_path << "'\n";
        return kExitParse;
    }
    out << text;
    std::cout << text;
    return summary.claim_holds ? 0 : kExitViolation;
}

int cmd_squeeze(const std::string& k_path, const std::string& a_path,
                const std::string& direction_text, const std::string& mu_text,
                bool emit_polygons) {
    gon::Instance outer = gon::load_instance_file(k_path);
    gon::Instance inner = gon::load_instance_file(a_path);

    gon::Rational mu;
    try {
        mu = gon::parse_rational(mu_text);
    } catch (const gon::parse_error& e) {
        std::cerr << "invalid mu: " << e.what() << "\n";
        return kExitBadMu;
    }
    if (mu <= 0 || mu > 1) {
        std::cerr << "invalid mu: must be in (0, 1]\n";
        return kExitBadMu;
    }

    auto tokens = split(direction_text, ',');
    if (tokens.size() != 2) {
        std::cerr << "direction must be dx,dy\n";
        return kExitParse;
    }
    gon::RationalVector direction;
    for (const auto& t : tokens) direction.push_back(gon::parse_rational(t));
    if (direction[0] == 0 && direction[1] == 0) {
        std::cerr << "direction must be nonzero\n";
        return kExitParse;
    }

    if (outer.body.dim() != 2 || inner.body.dim() != 2) {
        std::cerr << "squeeze needs two 2-D polygon files\n";
        return kExitParse;
    }
    gon::MembershipTester in_outer(outer.body);
    for (const auto& v : inner.body.vertices()) {
        if (!in_outer(v)) {
            std::cerr << "inner polygon is not contained in the outer one\n";
            return kExitContainment;
        }
    }

    gon::SqueezeResult result = gon::squeeze_polygon(outer.body, inner.body, direction, mu);
    const bool area_ratio_is_mu = result.area_a_prime == mu * result.area_a;
    const bool fiber_ratio_is_mu = result.max_fiber_a_prime == mu * result.max_fiber_a;
    bool prime_in_a = true;
    gon::MembershipTester in_a(inner.body);
    for (const auto& v : result.a_prime.vertices())
        if (!in_a(v)) prime_in_a = false;
    const bool difference_ok = gon::verify_difference_containment(result, inner.body);

    std::cout << "area-A: " << gon::to_string(result.area_a) << "\n";
    std::cout << "area-A-prime: " << gon::to_string(result.area_a_prime) << "\n";
    std::cout << "area-ratio: " << gon::to_string(result.area_a_prime / result.area_a) << "\n";
    std::cout << "max-fiber-A: " << gon::to_string(result.max_fiber_a) << "\n";
    std::cout << "max-fiber-A-prime: " << gon::to_string(result.max_fiber_a_prime) << "\n";
    std::cout << "ratio-equals-mu: " << (area_ratio_is_mu && fiber_ratio_is_mu ? "yes" : "no")
              << "\n";
    std::cout << "containment-A-prime-in-A: " << (prime_in_a ? "yes" : "no") << "\n";
    std::cout << "difference-containment: " << (difference_ok ? "yes" : "no") << "\n";
    if (emit_polygons) {
        std::cout << "polygon-A:\n" << gon::polygon_cycle_text(gon::hull2d(inner.body.vertices()));
        std::cout << "polygon-A-prime:\n" << gon::polygon_cycle_text(result.a_prime.vertices());
    }
    // The exact ratio identities are the point of the construction; failing
    // them means the certificate is wrong, which is a violation.
    if (!area_ratio_is_mu || !fiber_ratio_is_mu || !prime_in_a || !difference_ok)
        return kExitViolation;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact geometry-of-numbers toolkit: lattice point counts, successive\n"
        "minima, certified bounds, and the polygon squeezing demonstrator.\n"
        "Interval constants default to precision 1e-12; set\n"
        "GON_INTERVAL_PRECISION to override."};
    app.require_subcommand(1);

    std::string instance_path;
    auto* minima = app.add_subcommand("minima", "successive minima of an instance");
    minima->add_option("file", instance_path, "instance file")->required();

    auto* count = app.add_subcommand("count", "exact lattice point count");
    count->add_option("file", instance_path, "instance file")->required();

    std::string mu_mode = "auto";
    bool k_reduce = false;
    auto* bounds = app.add_subcommand("bounds", "evaluate and check all bounds");
    bounds->add_option("file", instance_path, "instance file")->required();
    bounds->add_option("--mu", mu_mode,
                       "auto (optimizer), lambda, or an explicit comma-separated list");
    bounds->add_flag("--k-reduce", k_reduce, "also show the k-reduced bound rows");

    int trials = 0;
    std::string dims_text = "1,2,3";
    std::uint64_t seed = 1;
    std::string ratio_text = "1/2";
    int magnitude = 3;
    std::string out_path;
    auto* campaign = app.add_subcommand("campaign", "randomized certification campaign");
    campaign->add_option("--trials", trials, "number of instances")->required();
    campaign->add_option("--dims", dims_text, "comma-separated dimensions (default 1,2,3)");
    campaign->add_option("--seed", seed, "master seed (default 1)");
    campaign->add_option("--sym-ratio", ratio_text, "fraction of symmetric instances (default 1/2)");
    campaign->add_option("--magnitude", magnitude, "vertex coordinate bound (default 3)");
    campaign->add_option("--out", out_path, "summary file")->required();

    std::string k_path, a_path, direction_text, mu_text;
    bool emit_polygons = false;
    auto* squeeze = app.add_subcommand("squeeze", "squeeze a polygon inside a convex container");
    squeeze->add_option("outer", k_path, "container polygon file K")->required();
    squeeze->add_option("inner", a_path, "inner polygon file A")->required();
    squeeze->add_option("--direction", direction_text, "fiber direction dx,dy")->required();
    squeeze->add_option("--mu", mu_text, "squeeze factor in (0, 1]")->required();
    squeeze->add_flag("--emit-polygons", emit_polygons, "print both boundary cycles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (minima->parsed()) return cmd_minima(instance_path);
        if (count->parsed()) return cmd_count(instance_path);
        if (bounds->parsed()) return cmd_bounds(instance_path, mu_mode, k_reduce);
        if (campaign->parsed())
            return cmd_campaign(trials, dims_text, seed, ratio_text, magnitude, out_path);
        if (squeeze->parsed())
            return cmd_squeeze(k_path, a_path, direction_text, mu_text, emit_polygons);
    } catch (const gon::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const gon::degenerate_body_error& e) {
        std::cerr << "degenerate body: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const gon::bound_violation_error& e) {
        std::cerr << "violation: " << e.what() << "\n" << e.dump();
        return kExitViolation;
    } catch (const gon::unsupported_dimension_error& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return kExitParse;
    } catch (const gon::contract_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const gon::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
