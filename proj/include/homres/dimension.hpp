#pragma once

// Syzygy swapping along generators / cogenerators, relative-dimension
// reports with witnesses, and the approximation / embedding sequences for
// objects of finite Gorenstein dimension.

#include "homres/gorenstein.hpp"

namespace homres {

enum class GcSide { Gen, Cogen };

/// A subcategory C with a generator and a cogenerator for it, certified at
/// construction time by one witness sequence per generator of C:
/// 0 -> C' -> X -> G -> 0 (gen side) and 0 -> G -> X -> C' -> 0 (cogen
/// side), with X in the respective subcategory and C' back in C.
struct GenCogenPair {
    Subcategory C;
    Subcategory gen;
    Subcategory cogen;
    std::vector<ShortExactSeq> gen_witnesses;
    std::vector<ShortExactSeq> cogen_witnesses;
};

/// Builds the pair, deriving and certifying one witness per generator of C
/// via right/left approximations; throws std::invalid_argument when an
/// approximation fails to cover/embed or its kernel/cokernel leaves C.
GenCogenPair make_gencogen(Subcategory C, Subcategory gen, Subcategory cogen);
GenCogenPair dual_gencogen(const GenCogenPair& pair);

/// Witness for an arbitrary member of C, derived on demand the same way.
ShortExactSeq gen_witness_for(const GenCogenPair& pair, const Module& d);
ShortExactSeq cogen_witness_for(const GenCogenPair& pair, const Module& d);

struct RebuiltSequence {
    Sequence seq;  // maps [A -> mid, mid -> end, end -> M] (4-term, display order)
    Module new_c;  // the rebuilt C-term (C1' resp. C0')
    Module new_x;  // the inserted gen/cogen term (P0 resp. I1)
};

/// Rebuilds the exact sequence 0 -> A -> C1 -> C0 -> M -> 0 (maps in
/// display order) so that one middle term comes from the generator
/// (side Gen: 0 -> A -> C1' -> P0 -> M -> 0) or the cogenerator
/// (side Cogen: 0 -> A -> I1 -> C0' -> M -> 0).  The rebuilt C-term is
/// spot-checked back into C (the extension-closure check for this chase).
RebuiltSequence prop_5_1_rebuild(const GenCogenPair& pair, const Sequence& seq, GcSide side);

struct SwapResult {
    Sequence swapped;          // same leftmost object, middle terms swapped
    ShortExactSeq connecting;  // Cogen: 0 -> M -> N -> X -> 0 with X in C
};

/// Syzygy swap: from 0 -> A -> C_{n-1} -> ... -> C_0 -> M -> 0 with middle
/// terms in C (side Cogen), returns 0 -> A -> I_{n-1} -> ... -> I_0 -> N -> 0
/// with middle terms in the cogenerator plus the connecting sequence.
/// Side Gen is the dual statement on coresolution-shaped input
/// 0 -> M -> C^0 -> ... -> C^{n-1} -> A -> 0.
SwapResult thm_5_3_swap(const GenCogenPair& pair, const Sequence& seq, GcSide side);

struct DimensionReport {
    Module m;
    std::size_t bound = 0;
    std::optional<std::size_t> upper;  // least verified resolution length
    bool upper_unknown = false;        // true when only "unknown beyond bound"
    std::size_t lower = 0;             // from Ext nonvanishing (0 when unavailable)
    std::string lower_reason;
    std::optional<Sequence> witness;   // 0 -> C_k -> ... -> C_0 -> m -> 0, display order
    // Gorenstein-dimension extras:
    std::optional<std::size_t> candidate;  // Ext-sup candidate value
    std::optional<GMembership> left_end;   // verdict on the candidate-th kernel
    bool agree = true;                     // candidate/witness/membership agreement
    bool finiteness_asserted = false;      // the finite-dimension hypothesis is an assertion
    std::string notes;
};

/// Relative dimension of m over add-closure of C: upper bound from the
/// proper-resolution kernels, lower bound from Ext nonvanishing when C is
/// self-orthogonal; gaps are reported, never guessed.
DimensionReport c_dim_report(const Subcategory& C, const Module& m, std::size_t bound);
/// Dual (coresolution) dimension, computed through the duality functor.
DimensionReport codim_report(const Subcategory& C, const Module& m, std::size_t bound);

/// The mixed witness 0 -> X_n -> ... -> X_0 -> m -> 0 with X_t in C and
/// all other terms in the generator (positions < t) resp. cogenerator
/// (positions > t); requires a verified C-resolution of m of length <= n.
Sequence thm_5_5_witness(const GenCogenPair& pair, const Module& m, std::size_t n,
                         std::size_t t);

/// Gorenstein-dimension report relative to a self-orthogonal X: the
/// Ext-sup candidate, cross-checked by a membership verdict on the
/// candidate-th syzygy.
DimensionReport gdim_report(const Subcategory& X, const Module& m, std::size_t bound);

struct Cor512Result {
    ShortExactSeq approx_ses;  // 0 -> N -> G -> M -> 0, G a member of the G-layer
    ShortExactSeq embed_ses;   // 0 -> M -> N' -> G' -> 0
};

/// The approximation and embedding sequences for m of verified finite
/// Gorenstein dimension; `gcat` is a finite add-presentation of the
/// G-layer objects available in the workspace (each generator checked by
/// g_membership against X).
Cor512Result cor_5_12_sequences(const Subcategory& X, const Subcategory& gcat,
                                const Module& m, const DimensionReport& gdim);

}  // namespace homres
