#include "homres/modcat.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace homres {

Matrix Algebra::left_mult(std::size_t i) const {
    Matrix m(p, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = c(i, j, k);
    return m;
}

AlgebraPtr dual_algebra(const AlgebraPtr& a) {
    if (auto pr = a->primal.lock()) return pr;  // dual of a dual
    if (auto cached = a->dual_cache.lock()) return cached;
    auto op = std::make_shared<Algebra>();
    op->name = a->name + "^op";
    op->p = a->p;
    op->dim = a->dim;
    op->unit = a->unit;
    op->mult.assign(a->mult.size(), 0);
    for (std::size_t i = 0; i < a->dim; ++i)
        for (std::size_t j = 0; j < a->dim; ++j)
            for (std::size_t k = 0; k < a->dim; ++k)
                op->mult[(i * a->dim + j) * a->dim + k] = a->c(j, i, k);
    op->primal = a;
    a->dual_cache = op;
    return op;
}

Matrix Module::act(const std::vector<i64>& coeffs) const {
    Matrix m = Matrix::zero(algebra->p, dim, dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] % algebra->p != 0) m = m + scale(action[i], coeffs[i]);
    return m;
}

bool Module::same_as(const Module& o) const {
    return algebra.get() == o.algebra.get() && dim == o.dim && action == o.action;
}

Module zero_module(const AlgebraPtr& a) {
    Module m;
    m.algebra = a;
    m.name = "0";
    m.dim = 0;
    m.action.assign(a->dim, Matrix(a->p, 0, 0));
    return m;
}

Module regular_module(const AlgebraPtr& a, const std::string& name) {
    Module m;
    m.algebra = a;
    m.name = name;
    m.dim = a->dim;
    for (std::size_t i = 0; i < a->dim; ++i) m.action.push_back(a->left_mult(i));
    return m;
}

bool Morphism::is_mono() const { return rank(matrix) == source.dim; }
bool Morphism::is_epi() const { return rank(matrix) == target.dim; }

Morphism identity_morphism(const Module& m) {
    return {m, m, Matrix::identity(m.algebra->p, m.dim)};
}

Morphism zero_morphism(const Module& src, const Module& tgt) {
    return {src, tgt, Matrix::zero(src.algebra->p, tgt.dim, src.dim)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!g.source.same_as(f.target)) throw std::invalid_argument("compose: middle modules differ");
    return {f.source, g.target, g.matrix * f.matrix};
}

Morphism operator+(const Morphism& f, const Morphism& g) {
    return {f.source, f.target, f.matrix + g.matrix};
}
Morphism operator-(const Morphism& f, const Morphism& g) {
    return {f.source, f.target, f.matrix - g.matrix};
}

const Module& Sequence::object(std::size_t i) const {
    if (maps.empty()) throw std::logic_error("empty sequence has no objects");
    return i == 0 ? maps[0].source : maps[i - 1].target;
}

Sequence padded(const Sequence& s) {
    Sequence out;
    Module z0 = zero_module(s.object(0).algebra);
    out.maps.push_back(zero_morphism(z0, s.object(0)));
    for (const auto& f : s.maps) out.maps.push_back(f);
    out.maps.push_back(zero_morphism(s.object(s.length()), z0));
    return out;
}

ValidationResult validate(const Algebra& a) {
    std::ostringstream err;
    if (!is_prime(a.p)) {
        err << "modulus " << a.p << " is not a prime below 2^31";
        return {false, err.str()};
    }
    if (a.unit.size() != a.dim || a.mult.size() != a.dim * a.dim * a.dim)
        return {false, "structure constant / unit vector size mismatch"};
    // unit acts as two-sided identity on every basis element
    for (std::size_t j = 0; j < a.dim; ++j) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            i64 left = 0, right = 0;
            for (std::size_t i = 0; i < a.dim; ++i) {
                left = (left + a.unit[i] * a.c(i, j, k)) % a.p;
                right = (right + a.unit[i] * a.c(j, i, k)) % a.p;
            }
            i64 expect = (j == k) ? 1 % a.p : 0;
            if (left != expect) {
                err << "unit is not a left identity on e_" << j << " (component " << k << ")";
                return {false, err.str()};
            }
            if (right != expect) {
                err << "unit is not a right identity on e_" << j << " (component " << k << ")";
                return {false, err.str()};
            }
        }
    }
    // associativity (e_i e_j) e_k = e_i (e_j e_k)
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                for (std::size_t l = 0; l < a.dim; ++l) {
                    i64 lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < a.dim; ++m) {
                        lhs = (lhs + a.c(i, j, m) * a.c(m, k, l)) % a.p;
                        rhs = (rhs + a.c(j, k, m) * a.c(i, m, l)) % a.p;
                    }
                    if (lhs != rhs) {
                        err << "associativity fails at (e_" << i << ", e_" << j << ", e_" << k
                            << ") component " << l;
                        return {false, err.str()};
                    }
                }
    return {true, ""};
}

ValidationResult validate(const Module& m) {
    const Algebra& a = *m.algebra;
    std::ostringstream err;
    if (m.action.size() != a.dim) return {false, "one action matrix per algebra basis element required"};
    for (std::size_t i = 0; i < a.dim; ++i)
        if (m.action[i].rows != m.dim || m.action[i].cols != m.dim || m.action[i].p != a.p)
            return {false, "action matrix shape/modulus mismatch"};
    Matrix unit_action = m.act(a.unit);
    if (unit_action != Matrix::identity(a.p, m.dim))
        return {false, "unit does not act as the identity"};
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Matrix lhs = m.action[i] * m.action[j];
            Matrix rhs = Matrix::zero(a.p, m.dim, m.dim);
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.c(i, j, k) != 0) rhs = rhs + scale(m.action[k], a.c(i, j, k));
            if (lhs != rhs) {
                err << "action does not respect e_" << i << " * e_" << j;
                return {false, err.str()};
            }
        }
    return {true, ""};
}

ValidationResult validate(const Morphism& f) {
    if (f.source.algebra.get() != f.target.algebra.get())
        return {false, "source and target live over different algebras"};
    if (f.matrix.rows != f.target.dim || f.matrix.cols != f.source.dim)
        return {false, "morphism matrix shape mismatch"};
    const Algebra& a = *f.source.algebra;
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (f.matrix * f.source.action[i] != f.target.action[i] * f.matrix) {
            std::ostringstream err;
            err << "intertwining fails for e_" << i;
            return {false, err.str()};
        }
    }
    return {true, ""};
}

std::vector<Morphism> hom_basis(const Module& m, const Module& n) {
    if (m.algebra.get() != n.algebra.get())
        throw std::invalid_argument("hom_basis: different algebras");
    const Algebra& a = *m.algebra;
    const std::size_t vars = n.dim * m.dim;  // entries of F, row-major
    if (vars == 0) return {};
    // Constraints F * rho_m(e_i) - rho_n(e_i) * F = 0.
    Matrix cons(a.p, a.dim * vars, vars);
    for (std::size_t e = 0; e < a.dim; ++e) {
        const Matrix& am = m.action[e];
        const Matrix& an = n.action[e];
        for (std::size_t r = 0; r < n.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) {
                std::size_t row = e * vars + r * m.dim + c;
                // (F * am)[r][c] = sum_k F[r][k] am[k][c]
                for (std::size_t k = 0; k < m.dim; ++k) {
                    std::size_t var = r * m.dim + k;
                    cons.at(row, var) = (cons.at(row, var) + am.at(k, c)) % a.p;
                }
                // -(an * F)[r][c] = -sum_k an[r][k] F[k][c]
                for (std::size_t k = 0; k < n.dim; ++k) {
                    std::size_t var = k * m.dim + c;
                    cons.at(row, var) = ((cons.at(row, var) - an.at(r, k)) % a.p + a.p) % a.p;
                }
            }
    }
    Matrix ker = kernel_basis(cons);
    std::vector<Morphism> out;
    for (std::size_t j = 0; j < ker.cols; ++j) {
        Matrix f(a.p, n.dim, m.dim);
        for (std::size_t r = 0; r < n.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) f.at(r, c) = ker.at(r * m.dim + c, j);
        out.push_back({m, n, f});
    }
    return out;
}

namespace {

// Module structure on a subspace given by independent columns B of the
// ambient module, assuming the subspace is action-invariant.
Module submodule_on(const Module& ambient, const Matrix& basis_cols, const std::string& name) {
    Module s;
    s.algebra = ambient.algebra;
    s.name = name;
    s.dim = basis_cols.cols;
    for (const auto& act : ambient.action) {
        auto x = solve_matrix(basis_cols, act * basis_cols);
        if (!x) throw std::logic_error("submodule_on: subspace is not action-invariant");
        s.action.push_back(*x);
    }
    return s;
}

}  // namespace

KernelResult kernel(const Morphism& f) {
    Matrix k = kernel_basis(f.matrix);
    Module km = submodule_on(f.source, k, "ker");
    return {km, Morphism{km, f.source, k}};
}

CokernelResult cokernel(const Morphism& f) {
    const Module& tgt = f.target;
    i64 p = tgt.algebra->p;
    RrefResult rf = rref(f.matrix);
    Matrix im_cols = select_columns(f.matrix, rf.pivots);  // basis of im(f)
    // Extend to a basis of the target by standard basis vectors.
    RrefResult ext = rref(hstack(im_cols, Matrix::identity(p, tgt.dim)));
    std::vector<std::size_t> comp_idx;
    for (auto pc : ext.pivots)
        if (pc >= im_cols.cols) comp_idx.push_back(pc - im_cols.cols);
    Matrix comp(p, tgt.dim, comp_idx.size());
    for (std::size_t j = 0; j < comp_idx.size(); ++j) comp.at(comp_idx[j], j) = 1 % p;
    Matrix full = hstack(im_cols, comp);
    auto inv = inverse(full);
    if (!inv) throw std::logic_error("cokernel: basis extension failed");
    Matrix proj = rows_slice(*inv, im_cols.cols, tgt.dim);  // coordinates along comp
    Module q;
    q.algebra = tgt.algebra;
    q.name = "coker";
    q.dim = comp_idx.size();
    for (const auto& act : tgt.action) q.action.push_back(proj * act * comp);
    return {q, Morphism{tgt, q, proj}};
}

ImageResult image(const Morphism& f) {
    RrefResult rf = rref(f.matrix);
    Matrix im_cols = select_columns(f.matrix, rf.pivots);
    Module im = submodule_on(f.target, im_cols, "im");
    auto epi_m = solve_matrix(im_cols, f.matrix);
    if (!epi_m) throw std::logic_error("image: factorization failed");
    return {im, Morphism{f.source, im, *epi_m}, Morphism{im, f.target, im_cols}};
}

DirectSumResult direct_sum(const std::vector<Module>& ms) {
    if (ms.empty()) throw std::invalid_argument("direct_sum of empty list");
    AlgebraPtr alg = ms[0].algebra;
    i64 p = alg->p;
    std::size_t total = 0;
    for (const auto& m : ms) {
        if (m.algebra.get() != alg.get()) throw std::invalid_argument("direct_sum: mixed algebras");
        total += m.dim;
    }
    Module s;
    s.algebra = alg;
    s.name = "sum";
    s.dim = total;
    for (std::size_t e = 0; e < alg->dim; ++e) {
        Matrix block(p, total, total);
        std::size_t off = 0;
        for (const auto& m : ms) {
            for (std::size_t i = 0; i < m.dim; ++i)
                for (std::size_t j = 0; j < m.dim; ++j)
                    block.at(off + i, off + j) = m.action[e].at(i, j);
            off += m.dim;
        }
        s.action.push_back(block);
    }
    DirectSumResult out{s, {}, {}};
    std::size_t off = 0;
    for (const auto& m : ms) {
        Matrix inj(p, total, m.dim), proj(p, m.dim, total);
        for (std::size_t i = 0; i < m.dim; ++i) {
            inj.at(off + i, i) = 1 % p;
            proj.at(i, off + i) = 1 % p;
        }
        out.injections.push_back({m, s, inj});
        out.projections.push_back({s, m, proj});
        off += m.dim;
    }
    return out;
}

SpanResult pullback(const Morphism& f, const Morphism& g) {
    if (!f.target.same_as(g.target)) throw std::invalid_argument("pullback: targets differ");
    auto sum = direct_sum({f.source, g.source});
    // P = ker( (f, -g) : X + N -> Y )
    Morphism h{sum.module, f.target,
               hstack(f.matrix, scale(g.matrix, -1))};
    auto k = kernel(h);
    k.module.name = "pullback";
    return {k.module, compose(sum.projections[0], k.inclusion),
            compose(sum.projections[1], k.inclusion)};
}

SpanResult pushout(const Morphism& f1, const Morphism& g1) {
    if (!f1.source.same_as(g1.source)) throw std::invalid_argument("pushout: sources differ");
    auto sum = direct_sum({f1.target, g1.target});
    Morphism h{f1.source, sum.module,
               vstack(f1.matrix, scale(g1.matrix, -1))};
    auto c = cokernel(h);
    c.module.name = "pushout";
    return {c.module, compose(c.projection, sum.injections[0]),
            compose(c.projection, sum.injections[1])};
}

std::optional<Morphism> pair_into_pullback(const SpanResult& pb, const Morphism& u1,
                                           const Morphism& u2) {
    if (!u1.source.same_as(u2.source)) throw std::invalid_argument("pair_into_pullback: cone sources differ");
    // (p1; p2) is a mono P -> X (+) N; solve (p1; p2) w = (u1; u2).
    Matrix paired = vstack(pb.p1.matrix, pb.p2.matrix);
    auto sol = solve_matrix(paired, vstack(u1.matrix, u2.matrix));
    if (!sol) return std::nullopt;
    return Morphism{u1.source, pb.module, *sol};
}

std::optional<Morphism> copair_from_pushout(const SpanResult& po, const Morphism& v1,
                                            const Morphism& v2) {
    if (!v1.target.same_as(v2.target)) throw std::invalid_argument("copair_from_pushout: cocone targets differ");
    // (q1 | q2) is an epi N (+) X -> Q; solve w (q1 | q2) = (v1 | v2) by transposing.
    Matrix joint = hstack(po.p1.matrix, po.p2.matrix);
    auto sol = solve_matrix(transpose(joint), transpose(hstack(v1.matrix, v2.matrix)));
    if (!sol) return std::nullopt;
    return Morphism{po.module, v1.target, transpose(*sol)};
}

ExactnessReport is_exact(const Sequence& s, const std::vector<std::size_t>* positions) {
    ExactnessReport rep;
    std::vector<std::size_t> pos;
    if (positions)
        pos = *positions;
    else
        for (std::size_t i = 1; i < s.length(); ++i) pos.push_back(i);
    for (std::size_t i : pos) {
        if (i == 0 || i >= s.length()) throw std::invalid_argument("is_exact: position out of range");
        const Morphism& fin = s.maps[i - 1];
        const Morphism& fout = s.maps[i];
        std::size_t mid = s.object(i).dim;
        std::size_t r_in = rank(fin.matrix);
        std::size_t r_out = rank(fout.matrix);
        bool composite_zero = is_zero(fout.matrix * fin.matrix);
        if (!composite_zero || r_in + r_out != mid) {
            rep.exact = false;
            rep.failure_position = i;
            rep.image_dim = r_in;
            rep.kernel_dim = mid - r_out;
            std::ostringstream os;
            os << "inexact at position " << i << ": image dim " << r_in << ", kernel dim "
               << (mid - r_out);
            if (!composite_zero) os << " (composite nonzero)";
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

Morphism free_cover(const Module& m) {
    AlgebraPtr a = m.algebra;
    Module reg = regular_module(a);
    std::vector<Module> copies(m.dim, reg);
    Module src = copies.empty() ? zero_module(a) : direct_sum(copies).module;
    src.name = "free";
    // Copy j maps by x |-> x . (j-th basis vector of m): column for basis
    // element e_i of the algebra is action(e_i) * b_j.
    Matrix f(a->p, m.dim, src.dim);
    for (std::size_t j = 0; j < m.dim; ++j)
        for (std::size_t i = 0; i < a->dim; ++i)
            for (std::size_t r = 0; r < m.dim; ++r)
                f.at(r, j * a->dim + i) = m.action[i].at(r, j);
    return {src, m, f};
}

SplitSummandResult split_summand(const Module& m, const Morphism& e) {
    if (!e.source.same_as(m) || !e.target.same_as(m))
        throw std::invalid_argument("split_summand: e must be an endomorphism of m");
    if (e.matrix * e.matrix != e.matrix)
        throw std::invalid_argument("split_summand: e is not idempotent");
    auto im = image(e);
    im.module.name = "summand";
    // e restricted to its image is the identity, so im.epi is a retraction.
    return {im.module, im.mono, im.epi};
}

std::optional<Morphism> factor_through_mono(const Morphism& inc, const Morphism& f) {
    if (!inc.target.same_as(f.target)) throw std::invalid_argument("factor_through_mono: targets differ");
    auto u = solve_matrix(inc.matrix, f.matrix);
    if (!u) return std::nullopt;
    return Morphism{f.source, inc.source, *u};
}

std::optional<Morphism> factor_through_epi(const Morphism& epi, const Morphism& f) {
    if (!epi.source.same_as(f.source)) throw std::invalid_argument("factor_through_epi: sources differ");
    auto u = solve_matrix(transpose(epi.matrix), transpose(f.matrix));
    if (!u) return std::nullopt;
    return Morphism{epi.target, f.target, transpose(*u)};
}

std::optional<Morphism> lift_through_epi(const Morphism& epi, const Morphism& g) {
    if (!epi.target.same_as(g.target)) throw std::invalid_argument("lift_through_epi: targets differ");
    auto basis = hom_basis(g.source, epi.source);
    i64 p = epi.matrix.p;
    std::size_t amb = g.matrix.rows * g.matrix.cols;
    Matrix sys(p, amb, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Matrix comp = epi.matrix * basis[j].matrix;
        for (std::size_t k = 0; k < amb; ++k) sys.at(k, j) = comp.a[k];
    }
    Matrix rhs(p, amb, 1);
    for (std::size_t k = 0; k < amb; ++k) rhs.at(k, 0) = g.matrix.a[k];
    auto coeffs = solve_matrix(sys, rhs);
    if (!coeffs) return std::nullopt;
    Matrix h = Matrix::zero(p, epi.matrix.cols, g.matrix.cols);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (coeffs->at(j, 0) != 0) h = h + scale(basis[j].matrix, coeffs->at(j, 0));
    return Morphism{g.source, epi.source, h};
}

std::optional<IsoPair> find_isomorphism(const Module& a, const Module& b) {
    if (a.dim != b.dim) return std::nullopt;
    if (a.dim == 0) return IsoPair{zero_morphism(a, b), zero_morphism(b, a)};
    auto basis = hom_basis(a, b);
    if (basis.empty()) return std::nullopt;
    i64 p = a.algebra->p;
    auto try_combo = [&](const std::vector<i64>& coeffs) -> std::optional<IsoPair> {
        Matrix f = Matrix::zero(p, b.dim, a.dim);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (coeffs[j] != 0) f = f + scale(basis[j].matrix, coeffs[j]);
        auto inv = inverse(f);
        if (!inv) return std::nullopt;
        return IsoPair{Morphism{a, b, f}, Morphism{b, a, *inv}};
    };
    // Exhaustive when the hom space is small enough.
    double total = 1;
    for (std::size_t j = 0; j < basis.size(); ++j) total *= double(p);
    if (total <= 4096) {
        std::vector<i64> coeffs(basis.size(), 0);
        for (;;) {
            if (auto r = try_combo(coeffs)) return r;
            std::size_t j = 0;
            while (j < coeffs.size() && ++coeffs[j] == p) coeffs[j++] = 0;
            if (j == coeffs.size()) return std::nullopt;  // exhaustive: no iso
        }
    }
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<i64> dist(0, p - 1);
    std::vector<i64> coeffs(basis.size());
    for (int trial = 0; trial < 2000; ++trial) {
        for (auto& c : coeffs) c = dist(rng);
        if (auto r = try_combo(coeffs)) return r;
    }
    return std::nullopt;
}

Module dual_module(const Module& m) {
    Module d;
    d.algebra = dual_algebra(m.algebra);
    d.name = m.name + "*";
    d.dim = m.dim;
    for (const auto& act : m.action) d.action.push_back(transpose(act));
    return d;
}

Morphism dual_morphism(const Morphism& f) {
    return {dual_module(f.target), dual_module(f.source), transpose(f.matrix)};
}

Sequence dual_sequence(const Sequence& s) {
    Sequence out;
    for (auto it = s.maps.rbegin(); it != s.maps.rend(); ++it)
        out.maps.push_back(dual_morphism(*it));
    return out;
}

}  // namespace homres
