#include "gon/io.hpp"

#include <fstream>
#include <sstream>

#include "gon/errors.hpp"
#include "gon/interval.hpp"

namespace gon {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

Rational parse_rational_at(const std::string& token, int line) {
    try {
        return parse_rational(token);
    } catch (const parse_error& e) {
        throw parse_error(std::string(e.what()), line);
    }
}

long parse_long_at(const std::string& value, int line, const char* key) {
    try {
        std::size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw parse_error(std::string("invalid integer for ") + key + ": '" + value + "'", line);
    }
}

std::uint64_t parse_seed_at(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument("seed");
        return v;
    } catch (const std::exception&) {
        throw parse_error("invalid seed: '" + value + "'", line);
    }
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }

    int dimension = -1;
    bool symmetric = false;
    std::uint64_t seed = 0;
    GeneratorParams params;
    std::vector<std::vector<Rational>> lattice_rows;
    std::vector<RationalVector> vertices;
    bool saw_lattice = false;
    bool saw_vertices = false;

    // Reads the `count` row lines following a section header; count < 0 means
    // "until the next key line or the end".
    auto read_rows = [&](std::size_t& i, int count, int width,
                         const char* what) -> std::vector<std::vector<Rational>> {
        std::vector<std::vector<Rational>> rows;
        while (i < lines.size()) {
            const int line_no = static_cast<int>(i) + 1;
            std::string body = trim(lines[i]);
            if (body.empty() || body[0] == '#') {
                ++i;
                continue;
            }
            if (body.find(':') != std::string::npos) break;  // next key or section
            auto tokens = split_ws(body);
            if (static_cast<int>(tokens.size()) != width)
                throw parse_error(std::string(what) + " row needs " + std::to_string(width) +
                                      " entries, got " + std::to_string(tokens.size()),
                                  line_no);
            std::vector<Rational> row;
            row.reserve(tokens.size());
            for (const auto& t : tokens) row.push_back(parse_rational_at(t, line_no));
            rows.push_back(std::move(row));
            ++i;
            if (count >= 0 && static_cast<int>(rows.size()) == count) break;
        }
        if (count >= 0 && static_cast<int>(rows.size()) != count)
            throw parse_error(std::string(what) + " section needs " + std::to_string(count) +
                                  " rows, got " + std::to_string(rows.size()),
                              static_cast<int>(lines.size()));
        return rows;
    };

    std::size_t i = 0;
    while (i < lines.size()) {
        const int line_no = static_cast<int>(i) + 1;
        std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '#') {
            ++i;
            continue;
        }
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value' or a section header", line_no);
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));

        if (key == "lattice" || key == "vertices") {
            if (!value.empty())
                throw parse_error("section header '" + key + ":' takes no value", line_no);
            if (dimension < 1)
                throw parse_error("dimension must come before the " + key + " section", line_no);
            ++i;
            if (key == "lattice") {
                if (saw_lattice) throw parse_error("duplicate lattice section", line_no);
                saw_lattice = true;
                lattice_rows = read_rows(i, dimension, dimension, "lattice");
            } else {
                if (saw_vertices) throw parse_error("duplicate vertices section", line_no);
                saw_vertices = true;
                for (auto& row : read_rows(i, -1, dimension, "vertex"))
                    vertices.push_back(RationalVector(row.begin(), row.end()));
            }
            continue;
        }

        if (key == "dimension") {
            long v = parse_long_at(value, line_no, "dimension");
            if (v < 1) throw parse_error("dimension must be positive", line_no);
            dimension = static_cast<int>(v);
        } else if (key == "symmetric") {
            if (value == "true")
                symmetric = true;
            else if (value == "false")
                symmetric = false;
            else
                throw parse_error("symmetric must be 'true' or 'false'", line_no);
        } else if (key == "seed") {
            seed = parse_seed_at(value, line_no);
        } else if (key == "magnitude") {
            params.magnitude = static_cast<int>(parse_long_at(value, line_no, "magnitude"));
        } else if (key == "vertex-count") {
            params.vertex_count = static_cast<int>(parse_long_at(value, line_no, "vertex-count"));
        } else {
            throw parse_error("unknown key '" + key + "'", line_no);
        }
        ++i;
    }

    if (dimension < 1) throw parse_error("missing dimension");
    if (!saw_vertices || vertices.empty()) throw parse_error("missing vertices section");
    params.dimension = dimension;

    RationalMatrix basis = RationalMatrix::identity(dimension);
    if (saw_lattice)
        for (int row = 0; row < dimension; ++row)
            for (int col = 0; col < dimension; ++col)
                basis(col, row) = lattice_rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    LatticeBasis lattice = [&] {
        try {
            return LatticeBasis(dimension, std::move(basis));
        } catch (const contract_error& e) {
            throw parse_error(std::string("bad lattice: ") + e.what());
        }
    }();

    return Instance{Polytope(dimension, std::move(vertices)), std::move(lattice), symmetric, seed,
                    params};
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

std::string emit_instance_text(const Instance& inst) {
    std::ostringstream out;
    const int d = inst.body.dim();
    out << "dimension: " << d << "\n";
    out << "symmetric: " << (inst.symmetric ? "true" : "false") << "\n";
    out << "seed: " << inst.seed << "\n";
    out << "magnitude: " << inst.params.magnitude << "\n";
    out << "vertex-count: " << inst.params.vertex_count << "\n";
    out << "lattice:\n";
    const RationalMatrix& basis = inst.lattice.basis();
    for (int row = 0; row < d; ++row) {
        for (int col = 0; col < d; ++col) {
            if (col) out << ' ';
            out << to_string(basis(col, row));
        }
        out << "\n";
    }
    out << "vertices:\n";
    for (const auto& v : inst.body.vertices()) {
        for (int col = 0; col < d; ++col) {
            if (col) out << ' ';
            out << to_string(v[static_cast<std::size_t>(col)]);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::string bound_value_text(const std::optional<BoundValue>& value) {
    if (!value) return "-";
    if (value->is_exact()) return to_string(value->value());
    return to_string(value->enclosure());
}

}  // namespace

namespace {

bool is_reduced_row(const std::string& name) {
    const std::string suffix = "-reduced";
    return name.size() > suffix.size() &&
           name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string emit_report_text(const BoundReport& report, bool include_reduced) {
    std::ostringstream out;
    out << "# report\n";
    out << "seed: " << report.instance.seed << "\n";
    out << "dimension: " << report.instance.body.dim() << "\n";
    out << "symmetric: " << (report.instance.symmetric ? "true" : "false") << "\n";
    out << "count: " << report.count << "\n";
    out << "lambda: ";
    for (std::size_t i = 0; i < report.minima.lambdas.size(); ++i) {
        if (i) out << ", ";
        out << to_string(report.minima.lambdas[i]);
    }
    out << "\n";
    for (const auto& w : report.minima.witnesses) {
        out << "witness:";
        for (const auto& c : w) out << ' ' << to_string(c);
        out << "\n";
    }
    out << "k-sym: ";
    if (report.minima.k_sym)
        out << *report.minima.k_sym;
    else
        out << "none";
    out << "\n";
    out << "k-asym: ";
    if (report.minima.k_asym)
        out << *report.minima.k_asym;
    else
        out << "none";
    out << "\n";
    for (const auto& line : report.bounds) {
        if (!include_reduced && is_reduced_row(line.name)) continue;
        out << "bound: " << line.name << " value=" << bound_value_text(line.value)
            << " applicable=" << (line.value ? "yes" : "no")
            << " satisfied=" << (line.satisfied ? "yes" : "no") << "\n";
    }
    if (report.threshold_verdict) {
        out << "threshold-verdict: " << (report.instance.symmetric ? "count==1" : "count<=1")
            << (*report.threshold_verdict ? " holds" : " violated") << "\n";
    }
    for (const auto& c : report.comparisons)
        out << "compare: " << c.left << ' ' << to_string(c.verdict) << ' ' << c.right << "\n";
    return out.str();
}

std::string emit_campaign_text(const CampaignSummary& summary) {
    std::ostringstream out;
    out << "# campaign\n";
    out << "trials: " << summary.options.trials << "\n";
    out << "seed: " << summary.options.seed << "\n";
    out << "dimensions: ";
    for (std::size_t i = 0; i < summary.options.dimensions.size(); ++i) {
        if (i) out << ',';
        out << summary.options.dimensions[i];
    }
    out << "\n";
    out << "symmetric-ratio: " << to_string(summary.options.symmetric_ratio) << "\n";
    out << "magnitude: " << summary.options.magnitude << "\n";
    out << "instances: " << summary.instances << "\n";
    out << "symmetric-instances: " << summary.symmetric_instances << "\n";
    out << "per-dimension:";
    for (std::size_t i = 0; i < summary.per_dimension.size(); ++i)
        out << ' ' << summary.options.dimensions[i] << '=' << summary.per_dimension[i];
    out << "\n";
    out << "bound-checks: " << summary.bound_checks << "\n";
    out << "conjecture-equalities: " << summary.conjecture_equalities << "\n";
    out << "threshold-cases: " << summary.threshold_cases << "\n";
    out << "capped-claim-cases: " << summary.capped_claim_cases << "\n";
    out << "capped-claim-wins: " << summary.capped_claim_wins << "\n";
    out << "claim: " << (summary.claim_holds ? "holds" : "violated") << "\n";
    return out.str();
}

}  // namespace gon
