#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "chromind/gf64.hpp"

namespace chromind {

/*
 * Dense matrix over GF(2^64).  Skew-symmetric here means symmetric with zero
 * diagonal, the characteristic-2 convention.  Matrices are value types; all
 * queries are const.
 */
class MatrixF {
public:
    MatrixF() = default;
    MatrixF(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static MatrixF identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GF64& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    GF64 at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    GF64& operator()(int r, int c) { return at(r, c); }
    GF64 operator()(int r, int c) const { return at(r, c); }

    MatrixF transpose() const;
    MatrixF operator*(const MatrixF& o) const;
    friend bool operator==(const MatrixF& a, const MatrixF& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    MatrixF submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const;
    MatrixF select_columns(std::span<const int> col_idx) const;
    // A[S] = A[S, S] for square matrices with identical row/column indexing.
    MatrixF principal_submatrix(std::span<const int> idx) const { return submatrix(idx, idx); }

    int rank() const;
    GF64 det() const;

    bool is_skew_symmetric() const;

    // Pf A = sqrt(det A); zero for odd dimension.  The skew check rejects
    // invalid input and can be disabled in trusted inner loops.
    GF64 pfaffian(bool check_skew = true) const;

    // Defining sum over the perfect matchings of the index set; dimension <= 12.
    GF64 pfaffian_combinatorial(bool check_skew = true) const;

    // In-place Gaussian elimination to row echelon form; returns the rank and
    // the pivot column of each nonzero row.
    int row_echelon(std::vector<int>* pivot_cols = nullptr);

    std::string to_hex_grid() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GF64> a_;
};

MatrixF block_diag(std::span<const MatrixF> blocks);

}  // namespace chromind
