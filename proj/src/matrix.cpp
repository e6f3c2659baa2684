#include "chromind/matrix.hpp"

#include <cstdio>
#include <stdexcept>

namespace chromind {

MatrixF MatrixF::identity(int n) {
    MatrixF m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GF64::one();
    return m;
}

MatrixF MatrixF::transpose() const {
    MatrixF t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

MatrixF MatrixF::operator*(const MatrixF& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("MatrixF: dimension mismatch in product");
    MatrixF p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const GF64 v = at(r, k);
            if (v.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) p.at(r, c) += v * o.at(k, c);
        }
    }
    return p;
}

MatrixF MatrixF::submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const {
    MatrixF s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t r = 0; r < row_idx.size(); ++r)
        for (size_t c = 0; c < col_idx.size(); ++c)
            s.at(static_cast<int>(r), static_cast<int>(c)) = at(row_idx[r], col_idx[c]);
    return s;
}

MatrixF MatrixF::select_columns(std::span<const int> col_idx) const {
    MatrixF s(rows_, static_cast<int>(col_idx.size()));
    for (int r = 0; r < rows_; ++r)
        for (size_t c = 0; c < col_idx.size(); ++c)
            s.at(r, static_cast<int>(c)) = at(r, col_idx[c]);
    return s;
}

int MatrixF::row_echelon(std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
        const GF64 inv = at(rank, col).inverse();
        for (int c = col; c < cols_; ++c) at(rank, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            const GF64 f = at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < cols_; ++c) at(r, c) += f * at(rank, c);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

int MatrixF::rank() const {
    MatrixF work = *this;
    return work.row_echelon();
}

GF64 MatrixF::det() const {
    if (rows_ != cols_) throw std::invalid_argument("MatrixF: determinant of non-square matrix");
    MatrixF w = *this;
    GF64 d = GF64::one();
    for (int col = 0; col < w.cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < w.rows_; ++r) {
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return GF64::zero();
        if (pivot != col)
            for (int c = col; c < w.cols_; ++c) std::swap(w.at(pivot, c), w.at(col, c));
        const GF64 p = w.at(col, col);
        d *= p;
        const GF64 inv = p.inverse();
        for (int r = col + 1; r < w.rows_; ++r) {
            const GF64 f = w.at(r, col);
            if (f.is_zero()) continue;
            const GF64 fi = f * inv;
            for (int c = col; c < w.cols_; ++c) w.at(r, c) += fi * w.at(col, c);
        }
    }
    return d;
}

bool MatrixF::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r) {
        if (!at(r, r).is_zero()) return false;
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    }
    return true;
}

GF64 MatrixF::pfaffian(bool check_skew) const {
    if (check_skew && !is_skew_symmetric())
        throw std::invalid_argument("MatrixF: pfaffian of non-skew-symmetric matrix");
    if (rows_ % 2 != 0) return GF64::zero();
    return det().sqrt();
}

namespace {

GF64 matching_sum(const MatrixF& a, std::vector<int>& alive) {
    if (alive.empty()) return GF64::one();
    const int u = alive.front();
    GF64 total = GF64::zero();
    for (size_t j = 1; j < alive.size(); ++j) {
        const int v = alive[j];
        const GF64 w = a.at(u, v);
        if (w.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(alive.size() - 2);
        for (size_t t = 1; t < alive.size(); ++t)
            if (t != j) rest.push_back(alive[t]);
        total += w * matching_sum(a, rest);
    }
    return total;
}

}  // namespace

GF64 MatrixF::pfaffian_combinatorial(bool check_skew) const {
    if (check_skew && !is_skew_symmetric())
        throw std::invalid_argument("MatrixF: pfaffian of non-skew-symmetric matrix");
    if (rows_ > 12)
        throw std::invalid_argument("MatrixF: combinatorial pfaffian capped at dimension 12");
    if (rows_ % 2 != 0) return GF64::zero();
    std::vector<int> alive(rows_);
    for (int i = 0; i < rows_; ++i) alive[i] = i;
    return matching_sum(*this, alive);
}

MatrixF block_diag(std::span<const MatrixF> blocks) {
    int r = 0, c = 0;
    for (const MatrixF& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    MatrixF out(r, c);
    int ro = 0, co = 0;
    for (const MatrixF& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

std::string MatrixF::to_hex_grid() const {
    std::string out;
    char buf[20];
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            std::snprintf(buf, sizeof(buf), "%016llx",
                          static_cast<unsigned long long>(at(r, c).bits()));
            out += buf;
            out += (c + 1 == cols_) ? '\n' : ' ';
        }
    }
    return out;
}

}  // namespace chromind
