#pragma once

// Subcategories add(T), right/left approximations (precovers and
// preenvelopes), Hom-exactness of sequences relative to a subcategory,
// Ext tables via free resolutions, and strong exactness.

#include "homres/modcat.hpp"

namespace homres {

/// add(T) for T the direct sum of a nonempty list of generators.
struct Subcategory {
    std::string name;
    std::vector<Module> generators;
    Module T;  // cached direct sum of the generators
};

Subcategory make_subcategory(const std::string& name, std::vector<Module> gens);
/// The subcategory of duals over the opposite algebra.
Subcategory dual_subcategory(const Subcategory& C);

struct AddMembership {
    bool yes = false;
    Morphism eval;                    // evaluation T^r -> m, r = dim Hom(T, m)
    std::optional<Morphism> section;  // splitting of eval when yes
};

/// Membership in add(T): the evaluation map splits iff m is a summand of T^r.
AddMembership is_in_add(const Subcategory& C, const Module& m);

struct Approximation {
    Morphism map;
    bool covers = false;  // right: epic; left: monic
};

/// The evaluation map T^r -> m; every morphism from add(T) factors through it.
Approximation right_approx(const Subcategory& C, const Module& m);
/// The coevaluation map m -> T^s; every morphism into add(T) factors through it.
Approximation left_approx(const Subcategory& C, const Module& m);

struct HomExactness {
    bool ok = true;
    std::size_t failure_position = 0;
    std::string detail;
};

/// Does the (exact) sequence stay exact under Hom(T, -)?  Checking against
/// T alone suffices for all of add(T): Hom(T^k, -) is a direct sum of
/// copies of Hom(T, -), and exactness of vector-space sequences is
/// preserved and reflected by finite direct sums.
HomExactness is_hom_from_C_exact(const Subcategory& C, const Sequence& s,
                                 const std::vector<std::size_t>* positions = nullptr);
/// Dual: exactness under the contravariant Hom(-, T).
HomExactness is_hom_into_C_exact(const Subcategory& C, const Sequence& s,
                                 const std::vector<std::size_t>* positions = nullptr);

struct ExtTable {
    Module source;
    Module target;
    std::vector<std::size_t> dims;  // dims[i] = dim Ext^i, i = 0..upto
};

/// Ext via an iterated free resolution of m (absolute Ext of the module
/// category).  dims[0] = dim Hom(m, n).
ExtTable ext_dims(const Module& m, const Module& n, std::size_t upto);

enum class Side { FromC, IntoC };

struct StrongExactness {
    bool ok = true;
    std::size_t failure_index = 0;  // i with nonzero Ext^1 against K_i
    std::size_t ext_dim = 0;
    std::string detail;
};

/// Strong Hom-exactness of an augmented window.  FromC expects
/// X_n -> ... -> X_0 -> M and checks Ext^1(T, K_i) = 0 for the interior
/// images K_i = Im(X_i -> X_{i-1}), i >= 1; IntoC expects
/// M -> X^0 -> ... -> X^n and checks Ext^1(K^i, T) = 0 dually.
StrongExactness is_strongly_exact(const Subcategory& C, const Sequence& s, Side side);

/// Matrix of Hom(T, f) in the given hom bases (columns indexed by hb_src).
Matrix induced_hom_from(const Module& T, const Morphism& f,
                        const std::vector<Morphism>& hb_src,
                        const std::vector<Morphism>& hb_tgt);
/// Matrix of Hom(f, T): precomposition, from Hom(f.target, T) to Hom(f.source, T).
Matrix induced_hom_into(const Module& T, const Morphism& f,
                        const std::vector<Morphism>& hb_src,
                        const std::vector<Morphism>& hb_tgt);

}  // namespace homres
