#pragma once

#include "pcalc/field.hpp"

#include <optional>
#include <vector>

namespace pcalc {

// Dense matrix over GF(p), row-major. A rows x cols matrix represents a
// linear map F^cols -> F^rows acting on column vectors.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), p_(2) {}
    Matrix(int rows, int cols, uint32_t p);
    Matrix(int rows, int cols, uint32_t p, std::vector<long long> entries);

    static Matrix identity(int n, uint32_t p);
    static Matrix zero(int rows, int cols, uint32_t p) { return Matrix(rows, cols, p); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t p() const { return p_; }

    uint32_t operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    uint32_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const = default;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(uint32_t c) const;

    Matrix transpose() const;
    Matrix col(int j) const;
    Matrix submatrix(int r0, int c0, int nrows, int ncols) const;
    void set_block(int r0, int c0, const Matrix& b);

    bool is_zero() const;
    bool is_identity() const;

    // [a | b] and [a ; b]
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix hstack(const std::vector<Matrix>& parts, uint32_t p);
    static Matrix vstack(const std::vector<Matrix>& parts, uint32_t p);
    static Matrix block_diag(const std::vector<Matrix>& parts, uint32_t p);

private:
    int rows_, cols_;
    uint32_t p_;
    std::vector<uint32_t> a_;
};

struct RrefResult {
    Matrix R;                 // reduced row echelon form, R = T * M
    std::vector<int> pivots;  // pivot columns, strictly increasing
    Matrix T;                 // invertible
};

// Canonical RREF. Unique for a given input.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

// Columns form the canonical basis of {v : Mv = 0} (RREF free-variable
// convention, free columns in increasing order).
Matrix kernel_basis(const Matrix& m);

struct CokernelResult {
    Matrix Q;  // d x rows(M), full row rank, Q*M = 0, Q in RREF
    int d;
};

CokernelResult cokernel(const Matrix& m);

// Exact solve A*X = B; X canonical (free variables zero). nullopt when
// inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Inverse of a square invertible matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// Basis of the column space, taken from the pivot columns of M.
Matrix column_space_basis(const Matrix& m);

} // namespace pcalc
