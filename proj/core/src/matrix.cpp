#include "pcalc/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace pcalc {

Matrix::Matrix(int rows, int cols, uint32_t p) : rows_(rows), cols_(cols), p_(p) {
    gf::require_prime(p);
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, 0u);
}

Matrix::Matrix(int rows, int cols, uint32_t p, std::vector<long long> entries)
    : Matrix(rows, cols, p) {
    if (entries.size() != a_.size())
        throw std::invalid_argument("matrix entry count mismatch");
    for (size_t i = 0; i < entries.size(); ++i) a_[i] = gf::reduce(entries[i], p);
}

Matrix Matrix::identity(int n, uint32_t p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix product shape/field mismatch");
    Matrix r(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint32_t v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = gf::add(r.at(i, j), gf::mul(v, o(k, j), p_), p_);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("matrix sum shape/field mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = gf::add(a_[i], o.a_[i], p_);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& v : r.a_) v = gf::neg(v, p_);
    return r;
}

Matrix Matrix::scaled(uint32_t c) const {
    Matrix r = *this;
    for (auto& v : r.a_) v = gf::mul(v, c % p_, p_);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::col(int j) const { return submatrix(0, j, rows_, 1); }

Matrix Matrix::submatrix(int r0, int c0, int nrows, int ncols) const {
    assert(r0 >= 0 && c0 >= 0 && r0 + nrows <= rows_ && c0 + ncols <= cols_);
    Matrix r(nrows, ncols, p_);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
    assert(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
    for (auto v : a_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, p_);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.p() != b.p())
        throw std::invalid_argument("hstack shape/field mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.p());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || a.p() != b.p())
        throw std::invalid_argument("vstack shape/field mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.p());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, uint32_t p) {
    int rows = parts.empty() ? 0 : parts.front().rows();
    int cols = 0;
    for (const auto& m : parts) cols += m.cols();
    Matrix r(rows, cols, p);
    int c = 0;
    for (const auto& m : parts) {
        r.set_block(0, c, m);
        c += m.cols();
    }
    return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, uint32_t p) {
    int cols = parts.empty() ? 0 : parts.front().cols();
    int rows = 0;
    for (const auto& m : parts) rows += m.rows();
    Matrix r(rows, cols, p);
    int c = 0;
    for (const auto& m : parts) {
        r.set_block(c, 0, m);
        c += m.rows();
    }
    return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& parts, uint32_t p) {
    int rows = 0, cols = 0;
    for (const auto& m : parts) {
        rows += m.rows();
        cols += m.cols();
    }
    Matrix r(rows, cols, p);
    int i = 0, j = 0;
    for (const auto& m : parts) {
        r.set_block(i, j, m);
        i += m.rows();
        j += m.cols();
    }
    return r;
}

RrefResult rref(const Matrix& m) {
    const uint32_t p = m.p();
    Matrix R = m;
    Matrix T = Matrix::identity(m.rows(), p);
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
        int piv = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (R(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        // swap into place
        if (piv != lead)
            for (int j = 0; j < m.cols(); ++j) std::swap(R.at(lead, j), R.at(piv, j));
        if (piv != lead)
            for (int j = 0; j < m.rows(); ++j) std::swap(T.at(lead, j), T.at(piv, j));
        uint32_t s = gf::inv(R(lead, c), p);
        for (int j = 0; j < m.cols(); ++j) R.at(lead, j) = gf::mul(R(lead, j), s, p);
        for (int j = 0; j < m.rows(); ++j) T.at(lead, j) = gf::mul(T(lead, j), s, p);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead || R(r, c) == 0) continue;
            uint32_t f = R(r, c);
            for (int j = 0; j < m.cols(); ++j)
                R.at(r, j) = gf::sub(R(r, j), gf::mul(f, R(lead, j), p), p);
            for (int j = 0; j < m.rows(); ++j)
                T.at(r, j) = gf::sub(T(r, j), gf::mul(f, T(lead, j), p), p);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(R), std::move(pivots), std::move(T)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix kernel_basis(const Matrix& m) {
    auto rr = rref(m);
    const uint32_t p = m.p();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix K(m.cols(), static_cast<int>(free_cols.size()), p);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        K.at(fc, static_cast<int>(k)) = 1;
        for (size_t r = 0; r < rr.pivots.size(); ++r)
            K.at(rr.pivots[r], static_cast<int>(k)) = gf::neg(rr.R(static_cast<int>(r), fc), p);
    }
    return K;
}

CokernelResult cokernel(const Matrix& m) {
    // Row space of Q = left null space of M = ker(M^T), re-echelonized for a
    // canonical representative.
    Matrix K = kernel_basis(m.transpose());
    Matrix Q = rref(K.transpose()).R;
    int d = Q.rows();  // K has full column rank, so no zero rows appear
    return {std::move(Q), d};
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.p() != b.p())
        throw std::invalid_argument("solve shape/field mismatch");
    auto rr = rref(Matrix::hstack(a, b));
    // consistency: no pivot in the appended block
    for (int c : rr.pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix X(a.cols(), b.cols(), a.p());
    for (size_t r = 0; r < rr.pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            X.at(rr.pivots[r], j) = rr.R(static_cast<int>(r), a.cols() + j);
    return X;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto rr = rref(m);
    if (static_cast<int>(rr.pivots.size()) != m.rows()) return std::nullopt;
    return rr.T;
}

Matrix column_space_basis(const Matrix& m) {
    auto rr = rref(m);
    Matrix B(m.rows(), static_cast<int>(rr.pivots.size()), m.p());
    for (size_t k = 0; k < rr.pivots.size(); ++k)
        B.set_block(0, static_cast<int>(k), m.col(rr.pivots[k]));
    return B;
}

} // namespace pcalc
