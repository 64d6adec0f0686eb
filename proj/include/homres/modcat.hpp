#pragma once

// The concrete abelian category: finite-dimensional modules over a
// finite-dimensional associative unital algebra over GF(p), presented by
// structure constants.  Kernels, cokernels, direct sums, pullbacks,
// pushouts, exactness checks and the contravariant duality functor live
// here; everything downstream is built out of these.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homres/linalg.hpp"

namespace homres {

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional associative unital algebra over GF(p), given by a
/// basis e_0..e_{d-1}, structure constants c[i][j][k] with
/// e_i e_j = sum_k c[i][j][k] e_k, and the unit as a coefficient vector.
struct Algebra {
    std::string name;
    i64 p = 2;
    std::size_t dim = 0;
    std::vector<i64> unit;             // length dim
    std::vector<i64> mult;             // dim^3, c[(i*dim+j)*dim+k]

    i64 c(std::size_t i, std::size_t j, std::size_t k) const {
        return mult[(i * dim + j) * dim + k];
    }

    /// Left-multiplication matrix of basis element e_i (column j holds e_i e_j).
    Matrix left_mult(std::size_t i) const;

    // Cached opposite algebra, so that dual-of-dual returns the same object.
    mutable std::weak_ptr<const Algebra> dual_cache;
    mutable std::weak_ptr<const Algebra> primal;
};

AlgebraPtr dual_algebra(const AlgebraPtr& a);

/// A finite-dimensional representation: one action matrix per algebra
/// basis element.  The zero module has dim 0 and empty matrices.
struct Module {
    AlgebraPtr algebra;
    std::string name;
    std::size_t dim = 0;
    std::vector<Matrix> action;  // algebra->dim matrices, each dim x dim

    bool is_zero() const { return dim == 0; }
    /// Action of a general algebra element given by coefficients.
    Matrix act(const std::vector<i64>& coeffs) const;
    bool same_as(const Module& o) const;  // structural equality
};

Module zero_module(const AlgebraPtr& a);
/// The regular module (algebra acting on itself on the left).
Module regular_module(const AlgebraPtr& a, const std::string& name = "regular");

struct Morphism {
    Module source;
    Module target;
    Matrix matrix;  // target.dim x source.dim

    bool is_mono() const;
    bool is_epi() const;
    bool is_zero() const { return homres::is_zero(matrix); }
};

Morphism identity_morphism(const Module& m);
Morphism zero_morphism(const Module& src, const Module& tgt);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism operator+(const Morphism& f, const Morphism& g);
Morphism operator-(const Morphism& f, const Morphism& g);

/// Composable chain M_0 -> M_1 -> ... -> M_k (target of each = source of next).
struct Sequence {
    std::vector<Morphism> maps;

    const Module& object(std::size_t i) const;  // M_i, 0 <= i <= maps.size()
    std::size_t length() const { return maps.size(); }
};

/// Pad a chain with zero modules on both ends, turning mono/epi claims at
/// the ends into interior exactness positions.
Sequence padded(const Sequence& s);

struct Violation {
    std::string what;  // names the first violated identity, with indices
};

struct ValidationResult {
    bool ok = true;
    std::string message;  // empty on success
};

ValidationResult validate(const Algebra& a);
ValidationResult validate(const Module& m);
ValidationResult validate(const Morphism& f);

/// Basis of the intertwiner space Hom(m, n), deterministic order.
std::vector<Morphism> hom_basis(const Module& m, const Module& n);

struct KernelResult {
    Module module;
    Morphism inclusion;  // module -> f.source, mono
};
KernelResult kernel(const Morphism& f);

struct CokernelResult {
    Module module;
    Morphism projection;  // f.target -> module, epi
};
CokernelResult cokernel(const Morphism& f);

struct ImageResult {
    Module module;
    Morphism epi;   // f.source -> module
    Morphism mono;  // module -> f.target; mono . epi = f
};
ImageResult image(const Morphism& f);

struct DirectSumResult {
    Module module;
    std::vector<Morphism> injections;
    std::vector<Morphism> projections;
};
DirectSumResult direct_sum(const std::vector<Module>& ms);

struct SpanResult {
    Module module;
    Morphism p1;  // pullback: P -> X;  pushout: N -> Q
    Morphism p2;  // pullback: P -> N;  pushout: X -> Q
};
/// Pullback of f: X -> Y and g: N -> Y (common target).
SpanResult pullback(const Morphism& f, const Morphism& g);
/// Pushout of f1: M -> N and g1: M -> X (common source).
SpanResult pushout(const Morphism& f1, const Morphism& g1);

/// The mediating morphism S -> P with p1 w = u1 and p2 w = u2, for a cone
/// (u1, u2) over the span the pullback was built from; nullopt when the
/// cone does not land in the pullback.
std::optional<Morphism> pair_into_pullback(const SpanResult& pb, const Morphism& u1,
                                           const Morphism& u2);
/// Dual: the mediating morphism Q -> S with w q1 = v1 and w q2 = v2.
std::optional<Morphism> copair_from_pushout(const SpanResult& po, const Morphism& v1,
                                            const Morphism& v2);

struct ExactnessReport {
    bool exact = true;
    std::size_t failure_position = 0;  // index of the interior object M_i
    std::size_t image_dim = 0;
    std::size_t kernel_dim = 0;
    std::string detail;
};

/// Checks im(f_i) = ker(f_{i+1}) at each interior position of the chain
/// (or at the listed subset).  Ends are not checked; use padded() to
/// assert mono/epi ends.
ExactnessReport is_exact(const Sequence& s,
                         const std::vector<std::size_t>* positions = nullptr);

/// Free cover: the canonical epimorphism Lambda^{m.dim} -> m sending the
/// i-th free generator to the i-th basis vector of m.
Morphism free_cover(const Module& m);

struct SplitSummandResult {
    Module module;       // S = im(e)
    Morphism section;    // S -> m
    Morphism retraction; // m -> S, retraction . section = id_S
};
/// Splits off the image of an idempotent endomorphism.
SplitSummandResult split_summand(const Module& m, const Morphism& e);

// ---- factorization helpers -------------------------------------------------

/// Unique u with inc . u = f, for inc mono and im(f) contained in im(inc).
/// nullopt when the image condition fails.
std::optional<Morphism> factor_through_mono(const Morphism& inc, const Morphism& f);

/// Some module morphism h with epi . h = g, found by solving inside
/// Hom(g.source, epi.source); deterministic (free coefficients zero).
std::optional<Morphism> lift_through_epi(const Morphism& epi, const Morphism& g);

/// Unique u with u . epi = f, for epi epic and ker(epi) contained in
/// ker(f).  nullopt when the kernel condition fails.
std::optional<Morphism> factor_through_epi(const Morphism& epi, const Morphism& f);

/// Mutually inverse pair (f: a -> b, g: b -> a) if one can be found by
/// scanning the hom space (exhaustive for small spaces, then seeded
/// random sampling).  nullopt does not certify non-isomorphism unless the
/// scan was exhaustive.
struct IsoPair {
    Morphism fwd;
    Morphism bwd;
};
std::optional<IsoPair> find_isomorphism(const Module& a, const Module& b);

// ---- duality ---------------------------------------------------------------

// The k-linear dual Hom_k(-, k) is an exact contravariant equivalence
// between modules over A and modules over the opposite algebra, with
// dual-of-dual the identity on the nose.  All "co" constructions are run
// through it.

Module dual_module(const Module& m);
/// Dual of f: M -> N is f*: N* -> M* (the transpose).
Morphism dual_morphism(const Morphism& f);
Sequence dual_sequence(const Sequence& s);  // arrows reversed

}  // namespace homres
