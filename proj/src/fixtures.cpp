#include "homres/fixtures.hpp"

#include <stdexcept>

namespace homres::fixtures {

namespace {

AlgebraPtr truncated_poly(const std::string& name, i64 p, std::size_t dim) {
    auto a = std::make_shared<Algebra>();
    a->name = name;
    a->p = p;
    a->dim = dim;
    a->unit.assign(dim, 0);
    a->unit[0] = 1;
    a->mult.assign(dim * dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (i + j < dim) a->mult[(i * dim + j) * dim + (i + j)] = 1;
    return a;
}

}  // namespace

AlgebraPtr lambda1() {
    static AlgebraPtr a = truncated_poly("LAMBDA1", 2, 2);
    return a;
}

AlgebraPtr lambda2() {
    static AlgebraPtr a = truncated_poly("LAMBDA2", 3, 3);
    return a;
}

AlgebraPtr a2() {
    static AlgebraPtr cached = [] {
        auto a = std::make_shared<Algebra>();
        a->name = "A2";
        a->p = 2;
        a->dim = 3;                 // eps1, eps2, arrow
        a->unit = {1, 1, 0};
        a->mult.assign(27, 0);
        auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
            a->mult[(i * 3 + j) * 3 + k] = 1;
        };
        set(0, 0, 0);  // eps1 eps1 = eps1
        set(1, 1, 1);  // eps2 eps2 = eps2
        set(2, 0, 2);  // arrow eps1 = arrow
        set(1, 2, 2);  // eps2 arrow = arrow
        return AlgebraPtr(a);
    }();
    return cached;
}

namespace {

/// Quotient k[x]/(x^d) / (x^n): n-dimensional, x shifts basis down.
Module jordan_block(const AlgebraPtr& alg, std::size_t n, const std::string& name) {
    Module m;
    m.algebra = alg;
    m.name = name;
    m.dim = n;
    for (std::size_t e = 0; e < alg->dim; ++e) {
        Matrix act(alg->p, n, n);
        for (std::size_t j = 0; j + e < n; ++j) act.at(j + e, j) = 1;
        m.action.push_back(act);
    }
    return m;
}

}  // namespace

Module k1() { return jordan_block(lambda1(), 1, "K1"); }
Module reg1() { return regular_module(lambda1(), "REG1"); }

Morphism soc_inc() {
    Matrix m(2, 2, 1);
    m.at(1, 0) = 1;  // 1 |-> x
    return {k1(), reg1(), m};
}

Morphism quo() {
    Matrix m(2, 1, 2);
    m.at(0, 0) = 1;  // 1 |-> 1, x |-> 0
    return {reg1(), k1(), m};
}

Module k2() { return jordan_block(lambda2(), 1, "K2"); }
Module m2() { return jordan_block(lambda2(), 2, "M2"); }
Module reg2() { return regular_module(lambda2(), "REG2"); }

Module a2_module(std::size_t n1, std::size_t n2, const Matrix& arrow,
                 const std::string& name) {
    if (arrow.rows != n2 || arrow.cols != n1)
        throw std::invalid_argument("a2_module: arrow matrix must be n2 x n1");
    AlgebraPtr alg = a2();
    std::size_t n = n1 + n2;
    Module m;
    m.algebra = alg;
    m.name = name;
    m.dim = n;
    Matrix e1(2, n, n), e2(2, n, n), al(2, n, n);
    for (std::size_t i = 0; i < n1; ++i) e1.at(i, i) = 1;
    for (std::size_t i = 0; i < n2; ++i) e2.at(n1 + i, n1 + i) = 1;
    for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t c = 0; c < n1; ++c) al.at(n1 + r, c) = arrow.at(r, c);
    m.action = {e1, e2, al};
    return m;
}

Module sa() { return a2_module(1, 0, Matrix(2, 0, 1), "SA"); }
Module sb() { return a2_module(0, 1, Matrix(2, 1, 0), "SB"); }
Module pa() { return a2_module(1, 1, Matrix::identity(2, 1), "PA"); }

}  // namespace homres::fixtures
