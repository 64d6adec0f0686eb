#include "homres/resolve.hpp"

#include <stdexcept>
#include <string>

namespace homres {

namespace {

[[noreturn]] void fail_hypothesis(const std::string& what) {
    throw std::invalid_argument("hypothesis violation: " + what);
}

void require(bool cond, const std::string& what) {
    if (!cond) fail_hypothesis(what);
}

/// Corestriction of f onto a submodule given by its inclusion; the factor
/// must exist whenever the certified hypotheses hold, so a failure here is
/// an internal inconsistency, not bad input.
Morphism corestrict(const Morphism& inc, const Morphism& f, const char* ctx) {
    auto u = factor_through_mono(inc, f);
    if (!u) throw std::logic_error(std::string("corestriction failed in ") + ctx);
    return *u;
}

Morphism mediate_into_pullback(const SpanResult& pb, const Morphism& u1, const Morphism& u2,
                               const char* ctx) {
    auto w = pair_into_pullback(pb, u1, u2);
    if (!w) throw std::logic_error(std::string("pullback mediation failed in ") + ctx);
    return *w;
}

/// Ensures a certificate is VerifiedYes, running the verifier on demand.
template <typename Verifier>
void demand(TriState& flag, Verifier&& verify, const std::string& what) {
    if (flag == TriState::Unchecked) verify();
    if (flag != TriState::VerifiedYes) fail_hypothesis(what);
}

/// Computes an unchecked certificate and reports whether it holds; used to
/// decide which conclusions of a construction can be re-verified.
template <typename Verifier>
bool certified(TriState& flag, Verifier&& verify) {
    if (flag == TriState::Unchecked) verify();
    return flag == TriState::VerifiedYes;
}

}  // namespace

Sequence AugmentedResolution::chain() const {
    Sequence s;
    if (terms.empty()) return s;
    Module z = zero_module(target.algebra);
    if (direction == Direction::Resolution) {
        for (std::size_t i = terms.size(); i-- > 0;) s.maps.push_back(maps[i]);
        s.maps.push_back(zero_morphism(target, z));
    } else {
        s.maps.push_back(zero_morphism(z, target));
        for (std::size_t i = 0; i < maps.size(); ++i) s.maps.push_back(maps[i]);
    }
    return s;
}

ShortExactSeq make_ses(const Morphism& f, const Morphism& g) {
    if (!f.target.same_as(g.source)) throw std::invalid_argument("make_ses: maps not composable");
    auto rep = is_exact(padded(Sequence{{f, g}}));
    if (!rep.exact)
        throw std::invalid_argument("make_ses: not short exact (" + rep.detail + ")");
    return ShortExactSeq{f.source, f.target, g.target, f, g};
}

ShortExactSeq dual_ses(const ShortExactSeq& s) {
    return make_ses(dual_morphism(s.g), dual_morphism(s.f));
}

AugmentedResolution dual_resolution(const AugmentedResolution& r) {
    AugmentedResolution d;
    d.direction = r.direction == Direction::Resolution ? Direction::Coresolution
                                                       : Direction::Resolution;
    d.target = dual_module(r.target);
    for (const Module& t : r.terms) d.terms.push_back(dual_module(t));
    for (const Morphism& f : r.maps) d.maps.push_back(dual_morphism(f));
    d.truncated = r.truncated;
    // The duality functor is exact and swaps the two Hom-exactness sides
    // together with the direction, so every certificate carries over to
    // the flag with the same name.
    d.exact = r.exact;
    d.terms_in_c = r.terms_in_c;
    d.proper = r.proper;
    d.strongly_proper = r.strongly_proper;
    d.other_side = r.other_side;
    d.subcategory = r.subcategory.empty() ? "" : r.subcategory + "*";
    return d;
}

// ---- verifiers --------------------------------------------------------------

ExactnessReport verify_exactness(AugmentedResolution& r) {
    auto rep = is_exact(r.chain());
    r.exact = rep.exact ? TriState::VerifiedYes : TriState::VerifiedNo;
    return rep;
}

bool verify_terms_membership(const Subcategory& C, AugmentedResolution& r) {
    bool ok = true;
    for (const Module& t : r.terms)
        if (!is_in_add(C, t).yes) {
            ok = false;
            break;
        }
    r.terms_in_c = ok ? TriState::VerifiedYes : TriState::VerifiedNo;
    r.subcategory = C.name;
    return ok;
}

HomExactness verify_properness(const Subcategory& C, AugmentedResolution& r) {
    auto rep = r.direction == Direction::Resolution ? is_hom_from_C_exact(C, r.chain())
                                                    : is_hom_into_C_exact(C, r.chain());
    r.proper = rep.ok ? TriState::VerifiedYes : TriState::VerifiedNo;
    r.subcategory = C.name;
    return rep;
}

HomExactness verify_other_side(const Subcategory& C, AugmentedResolution& r) {
    auto rep = r.direction == Direction::Resolution ? is_hom_into_C_exact(C, r.chain())
                                                    : is_hom_from_C_exact(C, r.chain());
    r.other_side = rep.ok ? TriState::VerifiedYes : TriState::VerifiedNo;
    r.subcategory = C.name;
    return rep;
}

StrongExactness verify_strongness(const Subcategory& C, AugmentedResolution& r) {
    // Unpadded augmented chain, as is_strongly_exact expects.
    Sequence s;
    if (r.direction == Direction::Resolution) {
        for (std::size_t i = r.terms.size(); i-- > 0;) s.maps.push_back(r.maps[i]);
    } else {
        s.maps = r.maps;
    }
    auto rep = is_strongly_exact(C, s,
                                 r.direction == Direction::Resolution ? Side::FromC : Side::IntoC);
    r.strongly_proper = rep.ok ? TriState::VerifiedYes : TriState::VerifiedNo;
    r.subcategory = C.name;
    return rep;
}

void verify_all(const Subcategory& C, AugmentedResolution& r) {
    verify_exactness(r);
    verify_terms_membership(C, r);
    verify_properness(C, r);
    verify_other_side(C, r);
    verify_strongness(C, r);
}

// ---- builders ---------------------------------------------------------------

ResolutionOutcome build_proper_resolution(const Subcategory& C, const Module& m,
                                          std::size_t length) {
    ResolutionOutcome out;
    AugmentedResolution r;
    r.direction = Direction::Resolution;
    r.target = m;
    Module cur = m;             // object still to be covered
    Morphism inc = identity_morphism(m);  // its inclusion into the previous term
    for (std::size_t step = 0; step <= length; ++step) {
        auto ap = right_approx(C, cur);
        if (!ap.covers) {
            out.obstructed = true;
            out.obstruction_step = step;
            out.detail = "right approximation of " + cur.name + " is not epic";
            return out;
        }
        r.terms.push_back(ap.map.source);
        r.maps.push_back(step == 0 ? ap.map : compose(inc, ap.map));
        auto k = kernel(ap.map);
        cur = k.module;
        inc = k.inclusion;
    }
    verify_exactness(r);
    verify_terms_membership(C, r);
    verify_properness(C, r);
    out.res = std::move(r);
    return out;
}

ResolutionOutcome build_coproper_coresolution(const Subcategory& C, const Module& m,
                                              std::size_t length) {
    ResolutionOutcome out;
    AugmentedResolution r;
    r.direction = Direction::Coresolution;
    r.target = m;
    Module cur = m;
    Morphism proj = identity_morphism(m);  // projection from the previous term
    for (std::size_t step = 0; step <= length; ++step) {
        auto ap = left_approx(C, cur);
        if (!ap.covers) {
            out.obstructed = true;
            out.obstruction_step = step;
            out.detail = "left approximation of " + cur.name + " is not monic";
            return out;
        }
        r.terms.push_back(ap.map.target);
        r.maps.push_back(step == 0 ? ap.map : compose(ap.map, proj));
        auto c = cokernel(ap.map);
        cur = c.module;
        proj = c.projection;
    }
    verify_exactness(r);
    verify_terms_membership(C, r);
    verify_properness(C, r);
    out.res = std::move(r);
    return out;
}

// ---- horseshoe fill ---------------------------------------------------------

HorseshoeResult horseshoe_fill(const ShortExactSeq& ses, FillSide side, const Morphism& a,
                               const Morphism& a2, const Morphism& h) {
    HorseshoeResult out;
    if (side == FillSide::Cover) {
        require(a.target.same_as(ses.A) && a2.target.same_as(ses.C) && h.target.same_as(ses.B),
                "horseshoe cover: targets must be the sequence terms");
        require(compose(ses.g, h).matrix == a2.matrix,
                "horseshoe cover: the partial lift h must satisfy g h = a2");
        auto sum = direct_sum({a.source, a2.source});
        out.middle = Morphism{sum.module, ses.B,
                              hstack(ses.f.matrix * a.matrix, h.matrix)};
        out.row_left = sum.injections[0];
        out.row_right = sum.projections[1];
    } else {
        require(a.source.same_as(ses.A) && a2.source.same_as(ses.C) && h.source.same_as(ses.B),
                "horseshoe envelope: sources must be the sequence terms");
        require(compose(h, ses.f).matrix == a.matrix,
                "horseshoe envelope: the partial extension h must satisfy h f = a");
        auto sum = direct_sum({a.target, a2.target});
        out.middle = Morphism{ses.B, sum.module,
                              vstack(h.matrix, a2.matrix * ses.g.matrix)};
        out.row_left = sum.injections[0];
        out.row_right = sum.projections[1];
    }
    return out;
}

// ---- theorem constructions ---------------------------------------------------

ConstructResult thm_3_2_construct(const Subcategory& C, const ShortExactSeq& ses,
                                  const AugmentedResolution& res0,
                                  const AugmentedResolution& res1) {
    AugmentedResolution r0 = res0, r1 = res1;
    require(r0.direction == Direction::Resolution && r1.direction == Direction::Resolution,
            "both inputs must be resolutions");
    require(r0.target.same_as(ses.B), "res0 must resolve the middle term");
    require(r1.target.same_as(ses.C), "res1 must resolve the last term");
    require(r1.length() >= 1, "res1 must have length at least 1");
    demand(r0.exact, [&] { verify_exactness(r0); }, "res0 is not exact");
    demand(r0.terms_in_c, [&] { verify_terms_membership(C, r0); },
           "res0 terms are not all in add(" + C.name + ")");
    demand(r1.exact, [&] { verify_exactness(r1); }, "res1 is not exact");
    demand(r1.proper, [&] { verify_properness(C, r1); },
           "res1 is not Hom(" + C.name + ", -)-exact");

    const std::size_t n0 = r0.length(), n1 = r1.length();
    const std::size_t L = std::min(n1, n0 + 1);  // ladder steps

    // M = pullback of X0 -> X1 against the augmentation of res1; X embeds
    // and the kernel of the augmentation embeds, giving the middle column
    // 0 -> ker(aug1) -> M -> X0 -> 0.
    auto pb = pullback(ses.g, r1.maps[0]);  // p1: M -> X0, p2: M -> res1[0]
    auto K10 = kernel(r1.maps[0]);
    Morphism ix_m = mediate_into_pullback(pb, ses.f, zero_morphism(ses.A, r1.terms[0]),
                                          "embedding X into the corner pullback");
    Morphism col_mono = mediate_into_pullback(
        pb, zero_morphism(K10.module, ses.B), K10.inclusion,
        "embedding the first kernel into the corner pullback");
    Morphism col_epi = pb.p1;

    ConstructResult out;
    std::vector<Morphism> alphas;  // alpha'_i : res1[i+1] + res0[i] -> V_i
    std::vector<Morphism> wincl;   // ker(alpha'_i) -> res1[i+1] + res0[i]
    for (std::size_t i = 0; i < L; ++i) {
        Morphism alpha = corestrict(kernel(r1.maps[i]).inclusion, r1.maps[i + 1],
                                    "thm 3.2 left corestriction");
        Morphism alpha2 = i == 0 ? r0.maps[0]
                                 : corestrict(kernel(r0.maps[i - 1]).inclusion, r0.maps[i],
                                              "thm 3.2 right corestriction");
        auto h = lift_through_epi(col_epi, alpha2);
        if (!h)
            fail_hypothesis("ladder step " + std::to_string(i) +
                            ": no lift through the column (covariant Hom-exactness fails)");
        auto sum = direct_sum({r1.terms[i + 1], r0.terms[i]});
        Morphism ap{sum.module, col_epi.source,
                    hstack(col_mono.matrix * alpha.matrix, h->matrix)};
        alphas.push_back(ap);
        auto W = kernel(ap);
        wincl.push_back(W.inclusion);

        // Next column 0 -> ker(res1.maps[i+1]) -> W -> ker(res0.maps[i]) -> 0.
        auto K1 = kernel(r1.maps[i + 1]);
        Morphism k1_in_sum = compose(sum.injections[0], K1.inclusion);
        Morphism new_mono = corestrict(W.inclusion, k1_in_sum, "thm 3.2 kernel step, mono");
        auto K0 = kernel(r0.maps[i]);
        Morphism w_to_c0 = compose(sum.projections[1], W.inclusion);
        Morphism new_epi = corestrict(K0.inclusion, w_to_c0, "thm 3.2 kernel step, epi");
        out.w_sequences.push_back(make_ses(new_mono, new_epi));
        col_mono = new_mono;
        col_epi = new_epi;
    }

    // Degree-0 term: the pullback of alpha'_0 against X -> M.
    auto pbc = pullback(alphas[0], ix_m);  // p1: C -> res1[1]+res0[0], p2: C -> X
    AugmentedResolution res;
    res.direction = Direction::Resolution;
    res.target = ses.A;
    res.terms.push_back(pbc.module);
    res.maps.push_back(pbc.p2);
    out.bridge = make_ses(pbc.p1, compose(pb.p2, alphas[0]));
    if (L >= 2) {
        Morphism w1_to_c = mediate_into_pullback(
            pbc, wincl[0], zero_morphism(wincl[0].source, ses.A),
            "embedding W_1 into the degree-0 pullback");
        res.terms.push_back(alphas[1].source);
        res.maps.push_back(compose(w1_to_c, alphas[1]));
        for (std::size_t d = 2; d + 1 <= L; ++d) {
            res.terms.push_back(alphas[d].source);
            res.maps.push_back(compose(wincl[d - 1], alphas[d]));
        }
    }

    verify_exactness(res);
    if (res.exact != TriState::VerifiedYes)
        throw std::logic_error("thm 3.2: constructed window failed exactness");
    verify_terms_membership(C, res);
    if (certified(r0.proper, [&] { verify_properness(C, r0); }) &&
        r1.proper == TriState::VerifiedYes)
        verify_properness(C, res);
    if (certified(r0.strongly_proper, [&] { verify_strongness(C, r0); }) &&
        certified(r1.strongly_proper, [&] { verify_strongness(C, r1); }))
        verify_strongness(C, res);
    if (certified(r0.other_side, [&] { verify_other_side(C, r0); }) &&
        certified(r1.other_side, [&] { verify_other_side(C, r1); }))
        verify_other_side(C, res);
    out.output = std::move(res);
    return out;
}

ConstructResult thm_3_6_construct(const Subcategory& C, const ShortExactSeq& ses,
                                  const AugmentedResolution& res0,
                                  const AugmentedResolution& res1) {
    AugmentedResolution r0 = res0, r1 = res1;
    require(r0.direction == Direction::Resolution && r1.direction == Direction::Resolution,
            "both inputs must be resolutions");
    require(r0.target.same_as(ses.B), "res0 must resolve the middle term");
    require(r1.target.same_as(ses.A), "res1 must resolve the first term");
    demand(r0.exact, [&] { verify_exactness(r0); }, "res0 is not exact");
    demand(r0.proper, [&] { verify_properness(C, r0); },
           "res0 is not Hom(" + C.name + ", -)-exact");
    demand(r1.exact, [&] { verify_exactness(r1); }, "res1 is not exact");
    demand(r1.terms_in_c, [&] { verify_terms_membership(C, r1); },
           "res1 terms are not all in add(" + C.name + ")");

    const std::size_t n0 = r0.length(), n1 = r1.length();
    const std::size_t L = std::min(n0, n1 + 1);  // ladder steps, degrees 1..L

    ConstructResult out;
    AugmentedResolution res;
    res.direction = Direction::Resolution;
    res.target = ses.C;
    res.terms.push_back(r0.terms[0]);
    res.maps.push_back(compose(ses.g, r0.maps[0]));  // res0[0] -> X0 -> X

    // First column 0 -> ker(aug0) -> W_1 -> X1 -> 0 inside res0[0].
    auto W1 = kernel(res.maps[0]);
    auto K00 = kernel(r0.maps[0]);
    Morphism col_mono = corestrict(W1.inclusion, K00.inclusion, "thm 3.6 first column, mono");
    Morphism col_epi = corestrict(ses.f, compose(r0.maps[0], W1.inclusion),
                                  "thm 3.6 first column, epi");
    out.w_sequences.push_back(make_ses(col_mono, col_epi));
    Morphism w_inc = W1.inclusion;  // W_i -> previous output term

    for (std::size_t i = 1; i <= L; ++i) {
        Morphism alpha = corestrict(kernel(r0.maps[i - 1]).inclusion, r0.maps[i],
                                    "thm 3.6 left corestriction");
        Morphism alpha2 = i == 1 ? r1.maps[0]
                                 : corestrict(kernel(r1.maps[i - 2]).inclusion, r1.maps[i - 1],
                                              "thm 3.6 right corestriction");
        auto h = lift_through_epi(col_epi, alpha2);
        if (!h)
            fail_hypothesis("ladder step " + std::to_string(i) +
                            ": no lift through the column (covariant Hom-exactness fails)");
        auto sum = direct_sum({r0.terms[i], r1.terms[i - 1]});
        Morphism ap{sum.module, col_epi.source,
                    hstack(col_mono.matrix * alpha.matrix, h->matrix)};
        res.terms.push_back(sum.module);
        res.maps.push_back(compose(w_inc, ap));
        if (i == L) break;

        auto W = kernel(ap);
        auto K0 = kernel(r0.maps[i]);
        Morphism new_mono = corestrict(W.inclusion, compose(sum.injections[0], K0.inclusion),
                                       "thm 3.6 kernel step, mono");
        auto K1 = kernel(r1.maps[i - 1]);
        Morphism new_epi = corestrict(K1.inclusion, compose(sum.projections[1], W.inclusion),
                                      "thm 3.6 kernel step, epi");
        out.w_sequences.push_back(make_ses(new_mono, new_epi));
        col_mono = new_mono;
        col_epi = new_epi;
        w_inc = W.inclusion;
    }

    verify_exactness(res);
    if (res.exact != TriState::VerifiedYes)
        throw std::logic_error("thm 3.6: constructed window failed exactness");
    verify_terms_membership(C, res);
    bool ses_from_ok = is_hom_from_C_exact(C, ses.chain()).ok;
    if (ses_from_ok && r0.proper == TriState::VerifiedYes &&
        certified(r1.proper, [&] { verify_properness(C, r1); }))
        verify_properness(C, res);
    if (certified(r0.strongly_proper, [&] { verify_strongness(C, r0); }) &&
        certified(r1.strongly_proper, [&] { verify_strongness(C, r1); }) &&
        ext_dims(C.T, ses.A, 1).dims[1] == 0)
        verify_strongness(C, res);
    if (certified(r0.other_side, [&] { verify_other_side(C, r0); }) &&
        certified(r1.other_side, [&] { verify_other_side(C, r1); }) &&
        is_hom_into_C_exact(C, ses.chain()).ok)
        verify_other_side(C, res);
    out.output = std::move(res);
    return out;
}

namespace {

ConstructResult dualize_construct(ConstructResult inner) {
    ConstructResult out;
    out.output = dual_resolution(inner.output);
    if (inner.bridge) out.bridge = dual_ses(*inner.bridge);
    for (const auto& w : inner.w_sequences) out.w_sequences.push_back(dual_ses(w));
    return out;
}

}  // namespace

ConstructResult thm_3_4_construct(const Subcategory& C, const ShortExactSeq& ses,
                                  const AugmentedResolution& cores0,
                                  const AugmentedResolution& cores1) {
    require(cores0.direction == Direction::Coresolution &&
                cores1.direction == Direction::Coresolution,
            "both inputs must be coresolutions");
    return dualize_construct(thm_3_2_construct(dual_subcategory(C), dual_ses(ses),
                                               dual_resolution(cores0),
                                               dual_resolution(cores1)));
}

ConstructResult thm_3_8_construct(const Subcategory& C, const ShortExactSeq& ses,
                                  const AugmentedResolution& cores0,
                                  const AugmentedResolution& cores1) {
    require(cores0.direction == Direction::Coresolution &&
                cores1.direction == Direction::Coresolution,
            "both inputs must be coresolutions");
    return dualize_construct(thm_3_6_construct(dual_subcategory(C), dual_ses(ses),
                                               dual_resolution(cores0),
                                               dual_resolution(cores1)));
}

// ---- iterated forms ----------------------------------------------------------

namespace {

/// Replaces the augmentation of a resolution window by its composite with
/// a further map out of the target; used at the bottom of the Last-term
/// recursion.  When g is an isomorphism the whole window is transported;
/// otherwise only the degree-0 term survives.
AugmentedResolution reaugment(const Subcategory& C, const AugmentedResolution& r,
                              const Morphism& g) {
    AugmentedResolution out;
    out.direction = Direction::Resolution;
    out.target = g.target;
    bool iso = g.is_mono() && g.is_epi();
    std::size_t keep = iso ? r.terms.size() : 1;
    for (std::size_t i = 0; i < keep; ++i) {
        out.terms.push_back(r.terms[i]);
        out.maps.push_back(i == 0 ? compose(g, r.maps[0]) : r.maps[i]);
    }
    verify_all(C, out);
    return out;
}

IterateResult iterate_first(const Subcategory& C, const Sequence& longseq,
                            const std::vector<AugmentedResolution>& inputs) {
    require(longseq.length() >= 1 && inputs.size() == longseq.length(),
            "first-term iterate: one input window per middle object");
    if (longseq.length() == 1) {
        // 0 -> X -> X^0 -> 0: transport the window along the isomorphism.
        const Morphism& g0 = longseq.maps[0];
        require(g0.is_mono() && g0.is_epi(), "first-term iterate: length-1 input must be an iso");
        AugmentedResolution r = inputs[0];
        r.target = g0.source;
        Morphism inv{g0.target, g0.source, *inverse(g0.matrix)};
        r.maps[0] = compose(inv, r.maps[0]);
        verify_all(C, r);
        IterateResult out{std::move(r), Sequence{{identity_morphism(inputs[0].terms[0])}}};
        return out;
    }
    // Split off Z = Im(X^0 -> X^1) and recurse on 0 -> Z -> X^1 -> ... -> X^n -> 0.
    auto im = image(longseq.maps[1]);
    Sequence rest;
    rest.maps.push_back(im.mono);
    for (std::size_t i = 2; i < longseq.length(); ++i) rest.maps.push_back(longseq.maps[i]);
    std::vector<AugmentedResolution> rest_inputs(inputs.begin() + 1, inputs.end());
    IterateResult inner = iterate_first(C, rest, rest_inputs);

    ShortExactSeq ses = make_ses(longseq.maps[0], im.epi);
    ConstructResult step = thm_3_2_construct(C, ses, inputs[0], inner.output);

    // Splice the bridge onto the inner auxiliary sequence:
    // 0 -> C -> B_1 -> (inner C) -> ... stays exact because the bridge ends
    // in an epi onto the inner degree-0 term, where the inner sequence starts.
    Sequence aux;
    aux.maps.push_back(step.bridge->f);
    aux.maps.push_back(compose(inner.aux->maps[0], step.bridge->g));
    for (std::size_t i = 1; i < inner.aux->length(); ++i) aux.maps.push_back(inner.aux->maps[i]);
    return IterateResult{std::move(step.output), std::move(aux)};
}

IterateResult iterate_last(const Subcategory& C, const Sequence& longseq,
                           const std::vector<AugmentedResolution>& inputs) {
    require(longseq.length() >= 1 && inputs.size() == longseq.length(),
            "last-term iterate: one input window per middle object");
    std::size_t n = longseq.length() - 1;  // middle objects X_0..X_n
    if (n == 0) return IterateResult{reaugment(C, inputs[0], longseq.maps[0]), std::nullopt};
    // Split off Y = Im(X_1 -> X_0); recurse on X_n -> ... -> X_1 -> Y -> 0.
    auto im = image(longseq.maps[n - 1]);  // f_1 is the next-to-last map
    Sequence rest;
    for (std::size_t i = 0; i + 2 < longseq.length(); ++i) rest.maps.push_back(longseq.maps[i]);
    rest.maps.push_back(im.epi);
    std::vector<AugmentedResolution> rest_inputs(inputs.begin() + 1, inputs.end());
    IterateResult inner = iterate_last(C, rest, rest_inputs);

    ShortExactSeq ses = make_ses(im.mono, longseq.maps[longseq.length() - 1]);
    ConstructResult step = thm_3_6_construct(C, ses, inputs[0], inner.output);
    return IterateResult{std::move(step.output), std::nullopt};
}

}  // namespace

IterateResult iterate_construct(IterateMode mode, const Subcategory& C, const Sequence& longseq,
                                const std::vector<AugmentedResolution>& inputs) {
    switch (mode) {
        case IterateMode::FirstTerm:
            return iterate_first(C, longseq, inputs);
        case IterateMode::LastTerm: {
            // inputs[j] belongs to X_j, which is displayed in reverse order;
            // the recursion peels from the end nearest the resolved object.
            return iterate_last(C, longseq, inputs);
        }
        case IterateMode::CoFirstTerm:
        case IterateMode::CoLastTerm: {
            Sequence dseq = dual_sequence(longseq);
            std::vector<AugmentedResolution> dins;
            dins.reserve(inputs.size());
            for (const auto& r : inputs) dins.push_back(dual_resolution(r));
            IterateResult inner = iterate_construct(
                mode == IterateMode::CoFirstTerm ? IterateMode::FirstTerm : IterateMode::LastTerm,
                dual_subcategory(C), dseq, dins);
            IterateResult out;
            out.output = dual_resolution(inner.output);
            if (inner.aux) out.aux = dual_sequence(*inner.aux);
            return out;
        }
    }
    throw std::logic_error("iterate_construct: unknown mode");
}

}  // namespace homres
