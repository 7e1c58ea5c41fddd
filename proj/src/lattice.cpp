#include "gon/lattice.hpp"

#include <algorithm>

#include "gon/errors.hpp"

namespace gon {

namespace {

constexpr long kEnumerationBoxLimit = 200000000;

}  // namespace

LatticeBasis::LatticeBasis(int dim, RationalMatrix basis) : dim_(dim), basis_(std::move(basis)) {
    if (dim_ < 0)
        throw contract_error("negative lattice dimension");
    if (basis_.rows() != dim_ || basis_.cols() != dim_)
        throw contract_error("lattice basis must be a square dim x dim matrix");
    if (dim_ == 0) {
        inverse_ = RationalMatrix(0, 0);
        det_magnitude_ = 1;
        return;
    }
    auto inv = basis_.inverse();
    if (!inv)
        throw contract_error("lattice basis is singular");
    inverse_ = std::move(*inv);
    det_magnitude_ = basis_.determinant();
    if (det_magnitude_ < 0)
        det_magnitude_ = -det_magnitude_;
}

LatticeBasis LatticeBasis::standard(int dim) {
    return LatticeBasis(dim, RationalMatrix::identity(dim));
}

RationalVector LatticeBasis::to_lattice_coords(const RationalVector& x) const {
    return inverse_.apply(x);
}

RationalVector LatticeBasis::from_lattice_coords(const RationalVector& z) const {
    return basis_.apply(z);
}

namespace {

// Integer bounding box of the polytope in lattice coordinates, then a
// candidate walk in lexicographic order with exact membership filtering.
template <typename Visit>
void visit_lattice_points(const Polytope& p, const LatticeBasis& l, Visit&& visit) {
    if (p.dim() != l.dim())
        throw contract_error("polytope and lattice dimensions differ");
    const int d = p.dim();
    std::vector<RationalVector> coords;
    coords.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) coords.push_back(l.to_lattice_coords(v));
    std::vector<Integer> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        Rational mn = coords[0][i], mx = coords[0][i];
        for (const auto& c : coords) {
            if (c[i] < mn) mn = c[i];
            if (c[i] > mx) mx = c[i];
        }
        lo[i] = ceil_rational(mn);
        hi[i] = floor_rational(mx);
        if (lo[i] > hi[i]) return;  // empty integer box, hence empty intersection
    }
    Integer box_size = 1;
    for (int i = 0; i < d; ++i) box_size *= hi[i] - lo[i] + 1;
    if (box_size > kEnumerationBoxLimit)
        throw resource_limit_error("lattice enumeration box exceeds " +
                                   std::to_string(kEnumerationBoxLimit) + " candidates");

    MembershipTester inside(p);
    std::vector<Integer> z = lo;
    RationalVector x(d);
    while (true) {
        for (int i = 0; i < d; ++i) x[i] = Rational(z[i]);
        RationalVector ambient = l.from_lattice_coords(x);
        if (inside(ambient)) visit(z, ambient);
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
}

}  // namespace

std::vector<RationalVector> enumerate_lattice_points(const Polytope& p, const LatticeBasis& l) {
    std::vector<RationalVector> out;
    visit_lattice_points(p, l,
                         [&](const std::vector<Integer>&, const RationalVector& ambient) {
                             out.push_back(ambient);
                         });
    return out;
}

long count_lattice_points(const Polytope& p, const LatticeBasis& l) {
    long count = 0;
    visit_lattice_points(p, l,
                         [&](const std::vector<Integer>&, const RationalVector&) { ++count; });
    return count;
}

namespace {

// Unimodular column reduction: returns a basis of {z integer : c z = 0}.
// Column operations are mirrored on an identity matrix; once every row is
// cleared outside its pivot column, the untouched columns of the mirror are
// exactly the integer kernel (the full group, not a finite-index part).
std::vector<std::vector<Integer>> integer_kernel(std::vector<std::vector<Integer>> c, int cols) {
    const int rows = static_cast<int>(c.size());
    std::vector<std::vector<Integer>> u(cols, std::vector<Integer>(cols, 0));
    for (int j = 0; j < cols; ++j) u[j][j] = 1;  // u[j] is the j-th column
    std::vector<bool> active(cols, true);

    auto column_op = [&](int target, int source, const Integer& q) {
        // column[target] -= q * column[source]
        for (int r = 0; r < rows; ++r) c[r][target] -= q * c[r][source];
        for (int r = 0; r < cols; ++r) u[target][r] -= q * u[source][r];
    };

    for (int row = 0; row < rows; ++row) {
        while (true) {
            int best = -1;
            Integer best_abs;
            for (int j = 0; j < cols; ++j) {
                if (!active[j] || c[row][j] == 0) continue;
                Integer a = abs(c[row][j]);
                if (best < 0 || a < best_abs) {
                    best = j;
                    best_abs = a;
                }
            }
            if (best < 0) break;  // row already clear on active columns
            bool reduced_any = false;
            for (int j = 0; j < cols; ++j) {
                if (j == best || !active[j] || c[row][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), c[row][j].get_mpz_t(), c[row][best].get_mpz_t());
                if (q != 0) column_op(j, best, q);
                if (c[row][j] != 0) reduced_any = true;
            }
            if (!reduced_any) {
                active[best] = false;  // pivot column for this row
                break;
            }
        }
    }
    std::vector<std::vector<Integer>> kernel;
    for (int j = 0; j < cols; ++j)
        if (active[j]) kernel.push_back(u[j]);
    return kernel;
}

}  // namespace

LatticeBasis sublattice_in_subspace(const LatticeBasis& l, const Subspace& v) {
    if (l.dim() != v.ambient_dim())
        throw contract_error("lattice and subspace dimensions differ");
    const int d = l.dim();
    const int k = v.dimension();
    if (k == 0) return LatticeBasis(0, RationalMatrix(0, 0));

    // Rows of "conditions": rational functionals vanishing exactly on V.
    RationalMatrix span_rows(k, d);
    for (int r = 0; r < k; ++r)
        for (int cidx = 0; cidx < d; ++cidx) span_rows(r, cidx) = v.basis()[r][cidx];
    std::vector<RationalVector> complement = nullspace(span_rows);  // y with (basis row).y = 0 ... see below
    // nullspace of the k x d matrix of basis rows gives vectors y with
    // B_rows y = 0; those y are the normals defining V as {x : y.x = 0}
    // only when the rows span V and y runs over V's orthogonal complement.
    // That is exactly the case: dim of the nullspace is d - k.
    RationalMatrix conditions(static_cast<int>(complement.size()), d);
    for (int r = 0; r < static_cast<int>(complement.size()); ++r)
        for (int cidx = 0; cidx < d; ++cidx) conditions(r, cidx) = complement[r][cidx];
    RationalMatrix cb = conditions * l.basis();  // conditions in lattice coordinates

    // Scale each row to integers.
    std::vector<std::vector<Integer>> rows_int;
    for (int r = 0; r < cb.rows(); ++r) {
        Integer lcm = 1;
        for (int j = 0; j < d; ++j) {
            Integer den = cb(r, j).get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Integer> row(d);
        for (int j = 0; j < d; ++j) {
            Rational scaled = cb(r, j) * Rational(lcm);
            row[j] = scaled.get_num();
        }
        rows_int.push_back(std::move(row));
    }

    auto kernel = integer_kernel(std::move(rows_int), d);
    if (static_cast<int>(kernel.size()) != k)
        throw error("integer kernel rank does not match the subspace dimension");

    // Generators in ambient space, then in V-coordinates.
    RationalMatrix out(k, k);
    for (int j = 0; j < static_cast<int>(kernel.size()); ++j) {
        RationalVector z(d);
        for (int i = 0; i < d; ++i) z[i] = Rational(kernel[j][i]);
        RationalVector coords = v.coordinates_of(l.from_lattice_coords(z));
        for (int i = 0; i < k; ++i) out(i, j) = coords[i];
    }
    return LatticeBasis(k, out);
}

ReduceResult reduce_to_span(const Polytope& k_body, const LatticeBasis& l) {
    auto points = enumerate_lattice_points(k_body, l);
    if (points.empty())
        throw empty_intersection_error("no lattice points in the body");
    Subspace span = Subspace::span_of(l.dim(), points);
    LatticeBasis sub = sublattice_in_subspace(l, span);
    return ReduceResult{span.dimension() == l.dim(), std::move(span), std::move(sub)};
}

}  // namespace gon
