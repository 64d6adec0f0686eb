#pragma once

// Exact dense linear algebra over the prime field GF(p).
//
// Every other component sits on top of these routines: row reduction,
// solving, kernels and column-space manipulation.  Matrices are dense,
// row-major, and immutable by convention (operations return new values).
// p is limited to < 2^31 so that all intermediate products fit in 64 bits.

#include <cstdint>
#include <optional>
#include <vector>

namespace homres {

using i64 = std::int64_t;

/// Deterministic primality test for p < 2^31 (trial division).
bool is_prime(i64 p);

i64 mod_inverse(i64 a, i64 p);

/// Dense matrix over GF(p).  Entries are kept reduced to [0, p).
struct Matrix {
    i64 p = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<i64> a;  // row-major, size rows*cols

    Matrix() = default;
    Matrix(i64 p_, std::size_t r, std::size_t c)
        : p(p_), rows(r), cols(c), a(r * c, 0) {}
    Matrix(i64 p_, std::size_t r, std::size_t c, std::vector<i64> entries);

    i64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    i64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const Matrix& o) const = default;

    static Matrix identity(i64 p, std::size_t n);
    static Matrix zero(i64 p, std::size_t r, std::size_t c);
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix scale(const Matrix& x, i64 c);
Matrix transpose(const Matrix& x);
bool is_zero(const Matrix& x);

/// Horizontal concatenation [x | y]; requires equal row counts.
Matrix hstack(const Matrix& x, const Matrix& y);
/// Vertical concatenation; requires equal column counts.
Matrix vstack(const Matrix& x, const Matrix& y);
/// Contiguous column slice [c0, c1).
Matrix columns(const Matrix& x, std::size_t c0, std::size_t c1);
/// Columns selected by index list, in the given order.
Matrix select_columns(const Matrix& x, const std::vector<std::size_t>& idx);
Matrix rows_slice(const Matrix& x, std::size_t r0, std::size_t r1);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form (Gauss-Jordan).  Total on well-formed input.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, returned as the columns of a matrix
/// (cols x k, where k = cols - rank).  Deterministic: the standard
/// free-variable parameterization of the RREF.
Matrix kernel_basis(const Matrix& m);

struct SolveResult {
    std::optional<Matrix> particular;  // one column; nullopt = no solution
    Matrix homogeneous;                // kernel basis of a
};

/// Solve a x = b for a single column b.  The particular solution is the
/// canonical one with all free variables set to zero.
SolveResult solve(const Matrix& a, const Matrix& b);

/// Solve a X = B columnwise; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// True when the column space of sub is contained in the column space of big.
bool column_space_contains(const Matrix& big, const Matrix& sub);
/// Column-space equality, checked by mutual containment of ranks.
bool same_column_space(const Matrix& x, const Matrix& y);

}  // namespace homres
