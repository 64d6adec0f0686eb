#include "homres/linalg.hpp"

#include <stdexcept>

namespace homres {

bool is_prime(i64 p) {
    if (p < 2 || p >= (i64(1) << 31)) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {
i64 pow_mod(i64 b, i64 e, i64 p) {
    i64 r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
}  // namespace

i64 mod_inverse(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("mod_inverse of zero");
    return pow_mod(a, p - 2, p);  // p prime
}

Matrix::Matrix(i64 p_, std::size_t r, std::size_t c, std::vector<i64> entries)
    : p(p_), rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    for (auto& v : a) {
        v %= p;
        if (v < 0) v += p;
    }
}

Matrix Matrix::identity(i64 p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

Matrix Matrix::zero(i64 p, std::size_t r, std::size_t c) { return Matrix(p, r, c); }

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows || x.p != y.p) throw std::invalid_argument("matrix product shape/modulus mismatch");
    Matrix r(x.p, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            i64 v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
        }
    return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + y.a[i]) % x.p;
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = ((r.a[i] - y.a[i]) % x.p + x.p) % x.p;
    return r;
}

Matrix scale(const Matrix& x, i64 c) {
    c %= x.p;
    if (c < 0) c += x.p;
    Matrix r = x;
    for (auto& v : r.a) v = v * c % x.p;
    return r;
}

Matrix transpose(const Matrix& x) {
    Matrix r(x.p, x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

bool is_zero(const Matrix& x) {
    for (auto v : x.a)
        if (v != 0) return false;
    return true;
}

Matrix hstack(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.p != y.p) throw std::invalid_argument("hstack row mismatch");
    Matrix r(x.p, x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
    if (x.cols != y.cols || x.p != y.p) throw std::invalid_argument("vstack column mismatch");
    Matrix r(x.p, x.rows + y.rows, x.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

Matrix columns(const Matrix& x, std::size_t c0, std::size_t c1) {
    Matrix r(x.p, x.rows, c1 - c0);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = c0; j < c1; ++j) r.at(i, j - c0) = x.at(i, j);
    return r;
}

Matrix select_columns(const Matrix& x, const std::vector<std::size_t>& idx) {
    Matrix r(x.p, x.rows, idx.size());
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = x.at(i, idx[j]);
    return r;
}

Matrix rows_slice(const Matrix& x, std::size_t r0, std::size_t r1) {
    Matrix r(x.p, r1 - r0, x.cols);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(i - r0, j) = x.at(i, j);
    return r;
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, 0, {}};
    Matrix& r = res.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
        std::size_t piv = lead;
        while (piv < r.rows && r.at(piv, col) == 0) ++piv;
        if (piv == r.rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        i64 inv = mod_inverse(r.at(lead, col), r.p);
        for (std::size_t j = 0; j < r.cols; ++j) r.at(lead, j) = r.at(lead, j) * inv % r.p;
        for (std::size_t i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            i64 f = r.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < r.cols; ++j)
                r.at(i, j) = ((r.at(i, j) - f * r.at(lead, j)) % r.p + r.p) % r.p;
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (pi < r.pivots.size() && r.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Matrix k(m.p, m.cols, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k.at(fc, j) = 1 % m.p;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            i64 v = r.reduced.at(i, fc);
            if (v != 0) k.at(r.pivots[i], j) = (m.p - v) % m.p;
        }
    }
    return k;
}

SolveResult solve(const Matrix& a, const Matrix& b) {
    if (b.cols != 1 || a.rows != b.rows || a.p != b.p)
        throw std::invalid_argument("solve: b must be a matching single column");
    SolveResult out{std::nullopt, kernel_basis(a)};
    auto x = solve_matrix(a, b);
    if (x) out.particular = *x;
    return out;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.p != b.p) throw std::invalid_argument("solve_matrix shape mismatch");
    RrefResult r = rref(hstack(a, b));
    // Inconsistent iff a pivot falls in the b block.
    for (auto pc : r.pivots)
        if (pc >= a.cols) return std::nullopt;
    Matrix x(a.p, a.cols, b.cols);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols; ++j)
            x.at(r.pivots[i], j) = r.reduced.at(i, a.cols + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    auto x = solve_matrix(m, Matrix::identity(m.p, m.rows));
    if (!x) return std::nullopt;
    if (rank(m) != m.rows) return std::nullopt;
    return x;
}

bool column_space_contains(const Matrix& big, const Matrix& sub) {
    if (sub.cols == 0) return true;
    return rank(hstack(big, sub)) == rank(big);
}

bool same_column_space(const Matrix& x, const Matrix& y) {
    std::size_t rx = rank(x), ry = rank(y);
    if (rx != ry) return false;
    return rank(hstack(x, y)) == rx;
}

}  // namespace homres
