#ifndef GON_MATRIX_HPP
#define GON_MATRIX_HPP

#include <optional>
#include <vector>

#include "gon/rational.hpp"

namespace gon {

/**
 * Dense rational matrix, row-major.  All arithmetic is exact; inverse() either
 * returns the exact inverse (M * M^-1 == identity bit-for-bit) or nothing.
 */
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols);
    RationalMatrix(int rows, int cols, std::vector<Rational> entries);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<Rational>& entries() const { return entries_; }

    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalVector apply(const RationalVector& x) const;
    RationalMatrix transposed() const;

    std::optional<RationalMatrix> inverse() const;
    Rational determinant() const;
    int rank() const;

    bool operator==(const RationalMatrix& other) const = default;

  private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

/** One exact solution of A x = b, or nothing if the system is inconsistent. */
std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b);

/** Basis of {x : A x = 0}; empty when the kernel is trivial. */
std::vector<RationalVector> nullspace(const RationalMatrix& a);

/** Rank of the set of vectors (as rows of a matrix). */
int rank_of_vectors(const std::vector<RationalVector>& vectors);

}  // namespace gon

#endif
