#ifndef GON_POLYTOPE_HPP
#define GON_POLYTOPE_HPP

#include <optional>
#include <vector>

#include "gon/matrix.hpp"
#include "gon/rational.hpp"

namespace gon {

/**
 * Convex polytope in vertex representation: the convex hull of a finite,
 * nonempty list of rational points.  Lower-dimensional polytopes are
 * first-class values; operations that need full dimension say so.
 */
class Polytope {
  public:
    Polytope(int dim, std::vector<RationalVector> vertices);

    int dim() const { return dim_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }

    bool is_full_dimensional() const;

    /** Average of the vertices; interior whenever the polytope is full-dimensional. */
    RationalVector vertex_centroid() const;

    /** Axis-aligned bounding box: per-coordinate [min, max]. */
    std::vector<std::pair<Rational, Rational>> bounding_box() const;

  private:
    int dim_;
    std::vector<RationalVector> vertices_;
};

/** Linear subspace of R^d given by an exactly independent rational basis. */
class Subspace {
  public:
    Subspace(int ambient_dim, std::vector<RationalVector> basis);

    /** Span of a set of vectors; keeps the first independent ones, in order. */
    static Subspace span_of(int ambient_dim, const std::vector<RationalVector>& vectors);

    int ambient_dim() const { return ambient_dim_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<RationalVector>& basis() const { return basis_; }

    bool contains(const RationalVector& x) const;
    /** Coordinates of x in this basis; x must lie in the subspace. */
    RationalVector coordinates_of(const RationalVector& x) const;
    RationalVector from_coordinates(const RationalVector& coords) const;

  private:
    int ambient_dim_;
    std::vector<RationalVector> basis_;
};

/** Exact membership x in conv(vertices), decided by LP feasibility. */
bool contains(const Polytope& p, const RationalVector& x);

/** The difference body K - K, as the vertex list {v - w}. */
Polytope difference_body(const Polytope& p);

/**
 * Gauge (Minkowski functional) of x with respect to D: min{lam >= 0 : x in
 * lam D}.  D must contain the origin.  Empty result means "infinite" (x is
 * outside the cone spanned by D).
 */
std::optional<Rational> gauge(const Polytope& d, const RationalVector& x);

/**
 * Gauge of the difference body of K' = P /\ V at x in V, without constructing
 * K' explicitly: a single LP over pairs of points of P constrained to V.
 */
std::optional<Rational> gauge_of_difference_in_subspace(const Polytope& p,
                                                        const Subspace& v,
                                                        const RationalVector& x);

/** Exact Lebesgue volume in dimension <= 3 (interval / shoelace / facet fan). */
Rational volume_exact(const Polytope& p);

Polytope translate(const Polytope& p, const RationalVector& t);

/** Convex hull of 2-D points as a counterclockwise cycle of extreme points. */
std::vector<RationalVector> hull2d(const std::vector<RationalVector>& points);

/** Shoelace area of a (possibly non-convex) simple polygon given as a cycle. */
Rational polygon_area(const std::vector<RationalVector>& cycle);

/** Outward facet inequalities a.x <= b of a full-dimensional polytope, dim <= 3. */
struct Facet {
    RationalVector normal;
    Rational offset;
};
std::vector<Facet> facet_inequalities(const Polytope& p);

/**
 * Repeated-membership helper.  Semantically identical to contains(); for a
 * full-dimensional polytope in dimension <= 3 it tests precomputed facet
 * inequalities instead of solving an LP per query point.
 */
class MembershipTester {
  public:
    explicit MembershipTester(Polytope p);
    bool operator()(const RationalVector& x) const;

  private:
    Polytope p_;
    std::vector<std::pair<Rational, Rational>> box_;
    std::vector<Facet> facets_;
    bool use_facets_;
};

/**
 * Repeated-gauge helper for a fixed body D containing the origin.  Same
 * value as gauge(D, x); full-dimensional bodies in dimension <= 3 evaluate
 * max_i (a_i.x / b_i) over precomputed facets instead of solving an LP.
 *
 * Full-dimensional origin-symmetric bodies in higher dimension run a small
 * active-set simplex on the polar program max{a.x : a.v <= 1 for v in D}
 * instead of the dense tableau: the +-pairing of the vertices yields a
 * basic feasible start directly, and every answer is certified before use
 * (hull multipliers reproduce x, the price vector is polar-feasible), so a
 * failed certificate merely falls back to the general LP.
 */
class GaugeTester {
  public:
    explicit GaugeTester(Polytope d);
    std::optional<Rational> operator()(const RationalVector& x) const;

  private:
    bool polar_gauge(const RationalVector& x, Rational& out) const;

    Polytope d_;
    std::vector<Facet> facets_;
    bool use_facets_;
    bool use_polar_ = false;
    std::vector<int> negation_of_;   // index of -v for each vertex v
    std::vector<int> start_cols_;    // d independent vertices for warm starts
    RationalMatrix start_inverse_;   // inverse of the matrix of those columns
};

/** Indices of vertices that are extreme points (not in the hull of the rest). */
std::vector<int> extreme_point_indices(const std::vector<RationalVector>& points);

}  // namespace gon

#endif
