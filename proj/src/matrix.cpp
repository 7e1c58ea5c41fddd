#include "gon/matrix.hpp"

#include "gon/errors.hpp"

namespace gon {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0)
        throw contract_error("negative matrix dimension");
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0 || entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw contract_error("matrix entry count does not match rows*cols");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_)
        throw contract_error("matrix product dimension mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < other.cols_; ++j)
                out(i, j) += a * other(k, j);
        }
    return out;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw contract_error("matrix-vector dimension mismatch");
    RationalVector out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                out[i] += (*this)(i, j) * x[j];
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (rows_ != cols_)
        throw contract_error("inverse of non-square matrix");
    const int n = rows_;
    RationalMatrix work(*this);
    RationalMatrix inv = identity(n);
    // Gauss-Jordan; the first nonzero pivot is fine in exact arithmetic.
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Rational p = work(col, col);
        for (int j = 0; j < n; ++j) {
            work(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work(r, col) == 0)
                continue;
            const Rational f = work(r, col);
            for (int j = 0; j < n; ++j) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_)
        throw contract_error("determinant of non-square matrix");
    const int n = rows_;
    RationalMatrix work(*this);
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(work(pivot, j), work(col, j));
            det = -det;
        }
        det *= work(col, col);
        const Rational p = work(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (work(r, col) == 0)
                continue;
            const Rational f = work(r, col) / p;
            for (int j = col; j < n; ++j)
                work(r, j) -= f * work(col, j);
        }
    }
    return det;
}

int RationalMatrix::rank() const {
    RationalMatrix work(*this);
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (work(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j)
                std::swap(work(pivot, j), work(rank, j));
        const Rational p = work(rank, col);
        for (int r = rank + 1; r < rows_; ++r) {
            if (work(r, col) == 0)
                continue;
            const Rational f = work(r, col) / p;
            for (int j = col; j < cols_; ++j)
                work(r, j) -= f * work(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw contract_error("solve dimension mismatch");
    const int m = a.rows();
    const int n = a.cols();
    RationalMatrix work(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            work(i, j) = a(i, j);
        work(i, n) = b[i];
    }
    std::vector<int> pivot_col(m, -1);
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pivot = -1;
        for (int r = row; r < m; ++r)
            if (work(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int j = 0; j <= n; ++j)
                std::swap(work(pivot, j), work(row, j));
        const Rational p = work(row, col);
        for (int j = 0; j <= n; ++j)
            work(row, j) /= p;
        for (int r = 0; r < m; ++r) {
            if (r == row || work(r, col) == 0)
                continue;
            const Rational f = work(r, col);
            for (int j = 0; j <= n; ++j)
                work(r, j) -= f * work(row, j);
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int r = row; r < m; ++r)
        if (work(r, n) != 0)
            return std::nullopt;
    RationalVector x(n, Rational(0));
    for (int r = 0; r < row; ++r)
        x[pivot_col[r]] = work(r, n);
    return x;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    RationalMatrix work(a);
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pivot = -1;
        for (int r = row; r < m; ++r)
            if (work(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int j = 0; j < n; ++j)
                std::swap(work(pivot, j), work(row, j));
        const Rational p = work(row, col);
        for (int j = 0; j < n; ++j)
            work(row, j) /= p;
        for (int r = 0; r < m; ++r) {
            if (r == row || work(r, col) == 0)
                continue;
            const Rational f = work(r, col);
            for (int j = 0; j < n; ++j)
                work(r, j) -= f * work(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        RationalVector x(n, Rational(0));
        x[free] = 1;
        for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
            x[pivot_col[r]] = -work(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

int rank_of_vectors(const std::vector<RationalVector>& vectors) {
    if (vectors.empty())
        return 0;
    const int cols = static_cast<int>(vectors.front().size());
    RationalMatrix m(static_cast<int>(vectors.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(vectors[i].size()) != cols)
            throw contract_error("ragged vector set");
        for (int j = 0; j < cols; ++j)
            m(i, j) = vectors[i][j];
    }
    return m.rank();
}

}  // namespace gon
