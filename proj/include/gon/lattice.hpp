#ifndef GON_LATTICE_HPP
#define GON_LATTICE_HPP

#include <optional>
#include <vector>

#include "gon/matrix.hpp"
#include "gon/polytope.hpp"
#include "gon/rational.hpp"

namespace gon {

/**
 * Full-rank lattice given by a rational basis matrix whose columns are the
 * generators.  The inverse and determinant magnitude are computed once at
 * construction.  Dimension 0 is allowed as the trivial lattice {0} (it shows
 * up as the sublattice of the zero subspace).
 */
class LatticeBasis {
  public:
    LatticeBasis(int dim, RationalMatrix basis);

    static LatticeBasis standard(int dim);

    int dim() const { return dim_; }
    const RationalMatrix& basis() const { return basis_; }
    const RationalMatrix& inverse() const { return inverse_; }
    const Rational& determinant_magnitude() const { return det_magnitude_; }

    RationalVector to_lattice_coords(const RationalVector& x) const;
    RationalVector from_lattice_coords(const RationalVector& z) const;

  private:
    int dim_;
    RationalMatrix basis_;
    RationalMatrix inverse_;
    Rational det_magnitude_;
};

/**
 * Successive minima lambda_1 <= ... <= lambda_d with achieving lattice
 * vectors.  k_sym indexes the last lambda <= 1 and k_asym the last
 * lambda <= 2 (1-based); either is absent when no index qualifies.
 * Synthetic profiles built from bare lambdas carry no witnesses.
 */
struct MinimaProfile {
    std::vector<Rational> lambdas;
    std::vector<RationalVector> witnesses;
    std::optional<int> k_sym;
    std::optional<int> k_asym;

    static MinimaProfile from_lambdas(std::vector<Rational> lambdas);

    int dim() const { return static_cast<int>(lambdas.size()); }
    MinimaProfile scaled(const Rational& factor) const;
};

/**
 * All lattice points inside the polytope, exactly, in lexicographic order of
 * their lattice coordinates: candidates come from the integer bounding box of
 * the vertices in lattice coordinates and are filtered by exact membership.
 */
std::vector<RationalVector> enumerate_lattice_points(const Polytope& p, const LatticeBasis& l);

/** Number of lattice points in the polytope, without materializing them. */
long count_lattice_points(const Polytope& p, const LatticeBasis& l);

/**
 * Greedy successive minima: nonzero lattice points in increasing order of
 * difference-body gauge, keeping each point independent of those selected.
 * Ties are broken by smallest coordinate magnitudes (sign-normalized so the
 * first nonzero coordinate is positive), which pins the witnesses without
 * affecting the minima values.  The enumeration radius doubles until the
 * result is certified complete, with a hard cap of 2^20 gauge units.
 */
MinimaProfile successive_minima(const Polytope& k, const LatticeBasis& l);

/**
 * Basis of the group (lattice of L) intersected with V, expressed in
 * V-coordinates.  Computed from the integer kernel of the linear conditions
 * "lattice coordinates whose image lies in V", never from the integer span
 * of any discovered points, so the result is the full intersection lattice.
 */
LatticeBasis sublattice_in_subspace(const LatticeBasis& l, const Subspace& v);

/** Outcome of restricting (K, L) to the span of its lattice points. */
struct ReduceResult {
    bool already_full;
    Subspace span;            // span of K cap Lambda
    LatticeBasis sublattice;  // Lambda cap span, in span coordinates
};

/**
 * The dimension-reduction step: V = span of the lattice points of K, with
 * the intersection lattice; K restricted to V stays implicit (its difference
 * gauge is served by gauge_of_difference_in_subspace).  The caller is
 * expected to have translated K so that 0 is a lattice point of K.
 */
ReduceResult reduce_to_span(const Polytope& k, const LatticeBasis& l);

}  // namespace gon

#endif
