#pragma once

// Finite windows of (co)resolutions with verification certificates, the
// generalized horseshoe fill, and the four zig-zag constructions that
// build a (co)resolution of one term of a short exact sequence from
// (co)resolutions of the other two, plus their iterated forms.

#include "homres/approx.hpp"
#include "homres/modcat.hpp"

namespace homres {

enum class Direction { Resolution, Coresolution };
enum class TriState { Unchecked, VerifiedYes, VerifiedNo };

/// A finite window of an augmented (co)resolution of `target`.
///
/// Resolution: terms C_0..C_n with maps[0]: C_0 -> target (augmentation)
/// and maps[i]: C_i -> C_{i-1}.  Coresolution: terms C^0..C^n with
/// maps[0]: target -> C^0 and maps[i]: C^{i-1} -> C^i.
///
/// Flags are set only by the verify_* operations (or by constructions
/// that ran those verifiers); `proper` always refers to the defining
/// Hom-exactness side of the direction (covariant for resolutions,
/// contravariant for coresolutions) and `other_side` to the opposite one.
struct AugmentedResolution {
    Direction direction = Direction::Resolution;
    Module target;
    std::vector<Module> terms;
    std::vector<Morphism> maps;  // terms.size() many, as described above
    bool truncated = true;       // finite windows are truncated by default

    TriState exact = TriState::Unchecked;
    TriState terms_in_c = TriState::Unchecked;
    TriState proper = TriState::Unchecked;
    TriState strongly_proper = TriState::Unchecked;
    TriState other_side = TriState::Unchecked;
    std::string subcategory;  // name the certificates refer to

    std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
    /// The window as a plain chain, augmentation included, padded with a
    /// zero module on the target side (so the augmentation's epi/mono
    /// claim becomes an interior exactness position).  The truncated end
    /// is left unpadded.
    Sequence chain() const;
};

/// Certified short exact sequence 0 -> A -> B -> C -> 0.
struct ShortExactSeq {
    Module A, B, C;
    Morphism f;  // A -> B
    Morphism g;  // B -> C
    Sequence chain() const { return padded(Sequence{{f, g}}); }
};

/// Builds the value after checking exactness; throws std::invalid_argument
/// if the pair is not a short exact sequence.
ShortExactSeq make_ses(const Morphism& f, const Morphism& g);
ShortExactSeq dual_ses(const ShortExactSeq& s);

AugmentedResolution dual_resolution(const AugmentedResolution& r);

// ---- verifiers (the only setters of certificate flags) ---------------------

ExactnessReport verify_exactness(AugmentedResolution& r);
bool verify_terms_membership(const Subcategory& C, AugmentedResolution& r);
HomExactness verify_properness(const Subcategory& C, AugmentedResolution& r);
HomExactness verify_other_side(const Subcategory& C, AugmentedResolution& r);
StrongExactness verify_strongness(const Subcategory& C, AugmentedResolution& r);
/// Runs all five verifiers.
void verify_all(const Subcategory& C, AugmentedResolution& r);

// ---- builders ---------------------------------------------------------------

struct ResolutionOutcome {
    std::optional<AugmentedResolution> res;
    bool obstructed = false;
    std::size_t obstruction_step = 0;  // step whose approximation failed
    std::string detail;
};

/// Iterates epic right approximations on successive kernels; obstruction
/// when some approximation is not epic.  The result is flagged proper by
/// verification, not by fiat.
ResolutionOutcome build_proper_resolution(const Subcategory& C, const Module& m,
                                          std::size_t length);
/// Dual: iterates monic left approximations on successive cokernels.
ResolutionOutcome build_coproper_coresolution(const Subcategory& C, const Module& m,
                                              std::size_t length);

// ---- horseshoe fill ---------------------------------------------------------

enum class FillSide { Cover, Envelope };

struct HorseshoeResult {
    Morphism middle;  // Cover: (f a, h) : C + C'' -> A'; Envelope: (k; b'' g) : A' -> D + D''
    Morphism row_left, row_right;  // the split middle row around the new corner
};

/// Cover side: given the ses 0 -> A -f-> A' -g-> A'' -> 0 and morphisms
/// a: C -> A, a2: C'' -> A'', h: C'' -> A' with a2 = g h, fills the middle
/// of the commuting ladder with (f a, h).  Envelope side is the dual:
/// a: A -> D, a2: A'' -> D'', h: A' -> D with a = h f.
HorseshoeResult horseshoe_fill(const ShortExactSeq& ses, FillSide side,
                               const Morphism& a, const Morphism& a2, const Morphism& h);

// ---- theorem constructions ---------------------------------------------------

struct ConstructResult {
    AugmentedResolution output;
    std::optional<ShortExactSeq> bridge;       // the short bridge sequence, when the
                                               // construction produces one
    std::vector<ShortExactSeq> w_sequences;    // interior 0 -> K -> W -> K' -> 0 data
};

/// From 0 -> X -> X0 -> X1 -> 0, a C-resolution of X0 and a covariantly
/// Hom-exact exact resolution window of X1, builds a resolution of X with
/// degree-0 term the pullback object C and degree-i terms
/// res1[i+1] + res0[i], plus the bridge 0 -> C -> res1[1]+res0[0] -> res1[0] -> 0.
ConstructResult thm_3_2_construct(const Subcategory& C, const ShortExactSeq& ses,
                                  const AugmentedResolution& res0,
                                  const AugmentedResolution& res1);
/// Dual of thm_3_2_construct (coresolution of the last term of the ses).
ConstructResult thm_3_4_construct(const Subcategory& C, const ShortExactSeq& ses,
                                  const AugmentedResolution& cores0,
                                  const AugmentedResolution& cores1);
/// From 0 -> X1 -> X0 -> X -> 0, a covariantly Hom-exact window for X0 and
/// a C-resolution of X1, builds a resolution of X with degree-0 term
/// res0[0] and degree-i terms res0[i] + res1[i-1].
ConstructResult thm_3_6_construct(const Subcategory& C, const ShortExactSeq& ses,
                                  const AugmentedResolution& res0,
                                  const AugmentedResolution& res1);
/// Dual of thm_3_6_construct (coresolution of the first term of the ses).
ConstructResult thm_3_8_construct(const Subcategory& C, const ShortExactSeq& ses,
                                  const AugmentedResolution& cores0,
                                  const AugmentedResolution& cores1);

enum class IterateMode { FirstTerm, CoFirstTerm, LastTerm, CoLastTerm };
// FirstTerm:   input 0 -> X -> X^0 -> ... -> X^n -> 0, resolutions of the X^j,
//              output resolution of X plus an auxiliary exact sequence.
// CoFirstTerm: dual (coresolutions; output coresolution of the last term Y).
// LastTerm:    input X_n -> ... -> X_0 -> X -> 0, resolutions of the X_j,
//              output resolution of X (degree-k term +_{i<=k} C_i^{k-i}).
// CoLastTerm:  dual of LastTerm.

struct IterateResult {
    AugmentedResolution output;
    std::optional<Sequence> aux;  // the second displayed sequence (First/CoFirst)
};

/// Iterated corollary forms, by induction on the length of `longseq`.
/// `longseq` carries the maps of the long exact input sequence in display
/// order (including the end augmentation onto / from the resolved object);
/// `inputs[j]` is the window for the middle object with index j in the
/// labelling above (X^j resp. X_j), so for the Last/CoLast modes inputs[0]
/// belongs to the middle object adjacent to the resolved one.
IterateResult iterate_construct(IterateMode mode, const Subcategory& C,
                                const Sequence& longseq,
                                const std::vector<AugmentedResolution>& inputs);

}  // namespace homres
