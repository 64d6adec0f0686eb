#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homres/fixtures.hpp"
#include "homres/resolve.hpp"

using namespace homres;
using namespace homres::fixtures;

namespace {

Subcategory free1() { return make_subcategory("add(REG1)", {reg1()}); }
Subcategory triv1() { return make_subcategory("add(K1)", {k1()}); }

/// m -> m by the identity, padded with zero terms up to the given length;
/// an exact window with terms in add(m).
AugmentedResolution trivial_window(const Module& m, std::size_t len) {
    AugmentedResolution r;
    r.direction = Direction::Resolution;
    r.target = m;
    r.terms.push_back(m);
    r.maps.push_back(identity_morphism(m));
    Module z = zero_module(m.algebra);
    Module prev = m;
    for (std::size_t i = 1; i <= len; ++i) {
        r.terms.push_back(z);
        r.maps.push_back(zero_morphism(z, prev));
        prev = z;
    }
    return r;
}

AugmentedResolution trivial_cowindow(const Module& m, std::size_t len) {
    AugmentedResolution r;
    r.direction = Direction::Coresolution;
    r.target = m;
    r.terms.push_back(m);
    r.maps.push_back(identity_morphism(m));
    Module z = zero_module(m.algebra);
    Module prev = m;
    for (std::size_t i = 1; i <= len; ++i) {
        r.terms.push_back(z);
        r.maps.push_back(zero_morphism(prev, z));
        prev = z;
    }
    return r;
}

std::vector<std::size_t> term_dims(const AugmentedResolution& r) {
    std::vector<std::size_t> out;
    for (const Module& t : r.terms) out.push_back(t.dim);
    return out;
}

AugmentedResolution periodic_k1(std::size_t len) {
    auto out = build_proper_resolution(free1(), k1(), len);
    REQUIRE(!out.obstructed);
    return *out.res;
}

AugmentedResolution coperiodic_k1(std::size_t len) {
    auto out = build_coproper_coresolution(free1(), k1(), len);
    REQUIRE(!out.obstructed);
    return *out.res;
}

}  // namespace

TEST_CASE("build_proper_resolution: periodic free window for K1") {
    auto C = free1();
    auto out = build_proper_resolution(C, k1(), 3);
    REQUIRE(!out.obstructed);
    const auto& r = *out.res;
    CHECK(r.length() == 3);
    CHECK(term_dims(r) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(r.exact == TriState::VerifiedYes);
    CHECK(r.terms_in_c == TriState::VerifiedYes);
    CHECK(r.proper == TriState::VerifiedYes);
    CHECK(r.subcategory == "add(REG1)");
    // Augmentation is epic, differentials have one-dimensional image.
    CHECK(r.maps[0].is_epi());
    CHECK(rank(r.maps[1].matrix) == 1);
}

TEST_CASE("build_proper_resolution: obstruction when no epic approximation exists") {
    auto out = build_proper_resolution(triv1(), reg1(), 2);
    CHECK(out.obstructed);
    CHECK(out.obstruction_step == 0);
    CHECK(!out.res.has_value());
}

TEST_CASE("build_coproper_coresolution: periodic injective window for K1") {
    auto out = build_coproper_coresolution(free1(), k1(), 3);
    REQUIRE(!out.obstructed);
    const auto& r = *out.res;
    CHECK(r.direction == Direction::Coresolution);
    CHECK(term_dims(r) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(r.exact == TriState::VerifiedYes);
    CHECK(r.terms_in_c == TriState::VerifiedYes);
    CHECK(r.proper == TriState::VerifiedYes);
    CHECK(r.maps[0].is_mono());
}

TEST_CASE("build_coproper_coresolution: obstruction when no monic approximation exists") {
    auto out = build_coproper_coresolution(triv1(), reg1(), 2);
    CHECK(out.obstructed);
    CHECK(out.obstruction_step == 0);
}

TEST_CASE("verifiers set certificates and catch damage") {
    auto C = free1();
    auto r = periodic_k1(3);
    SUBCASE("zeroing a differential breaks exactness") {
        r.maps[2] = zero_morphism(r.terms[2], r.terms[1]);
        CHECK(!verify_exactness(r).exact);
        CHECK(r.exact == TriState::VerifiedNo);
    }
    SUBCASE("strongness against the free subcategory holds") {
        CHECK(verify_strongness(C, r).ok);
        CHECK(r.strongly_proper == TriState::VerifiedYes);
    }
    SUBCASE("strongness fails against add(K1): the syzygies have self-extensions") {
        auto rep = verify_strongness(triv1(), r);
        CHECK(!rep.ok);
        CHECK(rep.ext_dim == 1);
        CHECK(r.strongly_proper == TriState::VerifiedNo);
    }
    SUBCASE("the contravariant side holds because REG1 is also injective") {
        CHECK(verify_other_side(C, r).ok);
        CHECK(r.other_side == TriState::VerifiedYes);
    }
    SUBCASE("verify_all fills every flag") {
        verify_all(C, r);
        CHECK(r.exact == TriState::VerifiedYes);
        CHECK(r.terms_in_c == TriState::VerifiedYes);
        CHECK(r.proper == TriState::VerifiedYes);
        CHECK(r.strongly_proper == TriState::VerifiedYes);
        CHECK(r.other_side == TriState::VerifiedYes);
    }
}

TEST_CASE("dual_resolution flips direction, preserves dimensions and certificates") {
    auto r = periodic_k1(3);
    verify_all(free1(), r);
    auto d = dual_resolution(r);
    CHECK(d.direction == Direction::Coresolution);
    CHECK(d.target.dim == 1);
    CHECK(term_dims(d) == term_dims(r));
    CHECK(d.exact == TriState::VerifiedYes);
    CHECK(d.proper == TriState::VerifiedYes);
    // The dual is a genuine coproper window over the opposite algebra.
    auto Cd = dual_subcategory(free1());
    AugmentedResolution d2 = d;
    verify_all(Cd, d2);
    CHECK(d2.exact == TriState::VerifiedYes);
    CHECK(d2.terms_in_c == TriState::VerifiedYes);
    CHECK(d2.proper == TriState::VerifiedYes);
    // Round trip returns to the original algebra and dimensions.
    auto dd = dual_resolution(d);
    CHECK(dd.direction == Direction::Resolution);
    CHECK(dd.target.algebra.get() == lambda1().get());
    CHECK(term_dims(dd) == term_dims(r));
}

TEST_CASE("make_ses accepts the socle sequence and rejects a broken pair") {
    auto s = make_ses(soc_inc(), quo());
    CHECK(s.A.dim == 1);
    CHECK(s.B.dim == 2);
    CHECK(s.C.dim == 1);
    CHECK_THROWS_AS(make_ses(soc_inc(), zero_morphism(reg1(), k1())), std::invalid_argument);
    auto d = dual_ses(s);
    CHECK(d.A.dim == 1);
    CHECK(d.B.dim == 2);
}

TEST_CASE("horseshoe_fill on the cover side") {
    auto s = make_ses(soc_inc(), quo());
    Morphism a = quo();                         // REG1 covering the left term
    Morphism a2 = quo();                        // REG1 covering the right term
    Morphism h = identity_morphism(reg1());     // partial lift, g h = a2
    auto fill = horseshoe_fill(s, FillSide::Cover, a, a2, h);
    CHECK(fill.middle.source.dim == 4);
    CHECK(fill.middle.is_epi());
    // Ladder commutes on both sides of the middle row.
    CHECK(compose(fill.middle, fill.row_left).matrix == compose(s.f, a).matrix);
    CHECK(compose(s.g, fill.middle).matrix == compose(a2, fill.row_right).matrix);
    // Wrong partial lift is rejected.
    CHECK_THROWS_AS(horseshoe_fill(s, FillSide::Cover, a, a2, zero_morphism(reg1(), reg1())),
                    std::invalid_argument);
}

TEST_CASE("horseshoe_fill on the envelope side") {
    auto s = make_ses(soc_inc(), quo());
    Morphism b = soc_inc();
    Morphism b2 = soc_inc();
    Morphism h = identity_morphism(reg1());  // h f = b
    auto fill = horseshoe_fill(s, FillSide::Envelope, b, b2, h);
    CHECK(fill.middle.target.dim == 4);
    CHECK(fill.middle.is_mono());
    CHECK(compose(fill.middle, s.f).matrix == compose(fill.row_left, b).matrix);
    CHECK(compose(fill.row_right, fill.middle).matrix == compose(b2, s.g).matrix);
    CHECK_THROWS_AS(horseshoe_fill(s, FillSide::Envelope, b, b2, zero_morphism(reg1(), reg1())),
                    std::invalid_argument);
}

TEST_CASE("thm_3_2_construct: corner window for the socle sequence") {
    auto C = free1();
    auto ses = make_ses(soc_inc(), quo());
    auto res0 = trivial_window(reg1(), 3);
    auto res1 = periodic_k1(3);
    auto got = thm_3_2_construct(C, ses, res0, res1);
    const auto& r = got.output;
    CHECK(r.target.dim == 1);
    CHECK(term_dims(r) == std::vector<std::size_t>{2, 2, 2});
    CHECK(r.exact == TriState::VerifiedYes);
    CHECK(r.terms_in_c == TriState::VerifiedYes);
    CHECK(r.proper == TriState::VerifiedYes);
    // The degree-0 corner is the free module in disguise.
    CHECK(find_isomorphism(r.terms[0], reg1()).has_value());
    // Bridge 0 -> corner -> res1[1] + res0[0] -> res1[0] -> 0.
    REQUIRE(got.bridge.has_value());
    CHECK(got.bridge->A.dim == 2);
    CHECK(got.bridge->B.dim == 4);
    CHECK(got.bridge->C.dim == 2);
    // Interior kernel ladders: 0 -> K -> W -> K' -> 0 stays exact.
    CHECK(got.w_sequences.size() == 3);
    CHECK(got.w_sequences[0].A.dim == 1);
    CHECK(got.w_sequences[0].B.dim == 1);
    CHECK(got.w_sequences[0].C.dim == 0);
}

TEST_CASE("thm_3_2_construct: degenerate third term") {
    auto C = free1();
    Module z = zero_module(lambda1());
    auto ses = make_ses(identity_morphism(k1()), zero_morphism(k1(), z));
    auto res0 = periodic_k1(3);
    auto res1 = trivial_window(z, 3);
    auto got = thm_3_2_construct(C, ses, res0, res1);
    CHECK(term_dims(got.output) == std::vector<std::size_t>{2, 2, 2});
    CHECK(got.output.exact == TriState::VerifiedYes);
    CHECK(got.output.proper == TriState::VerifiedYes);
    CHECK(find_isomorphism(got.output.terms[0], reg1()).has_value());
}

TEST_CASE("thm_3_2_construct: degenerate first term gives an exact window over zero") {
    auto C = free1();
    Module z = zero_module(lambda1());
    auto ses = make_ses(zero_morphism(z, k1()), identity_morphism(k1()));
    auto got = thm_3_2_construct(C, ses, periodic_k1(3), periodic_k1(3));
    CHECK(got.output.target.dim == 0);
    CHECK(got.output.exact == TriState::VerifiedYes);
}

TEST_CASE("thm_3_2_construct: hypothesis certificates are enforced") {
    auto ses = make_ses(soc_inc(), quo());
    // Terms of res0 not in add(K1).
    CHECK_THROWS_AS(
        thm_3_2_construct(triv1(), ses, trivial_window(reg1(), 3), periodic_k1(3)),
        std::invalid_argument);
    // Splittable sequence over add(K1), but the second window is a free
    // resolution, which is not Hom(K1, -)-exact.
    auto sum = direct_sum({k1(), k1()});
    auto split_ses = make_ses(sum.injections[0], sum.projections[1]);
    CHECK_THROWS_AS(
        thm_3_2_construct(triv1(), split_ses, trivial_window(sum.module, 3), periodic_k1(3)),
        std::invalid_argument);
    // Mismatched resolution target.
    CHECK_THROWS_AS(thm_3_2_construct(free1(), ses, periodic_k1(3), periodic_k1(3)),
                    std::invalid_argument);
}

TEST_CASE("thm_3_6_construct: split sequence doubles the covers") {
    auto C = free1();
    auto sum = direct_sum({k1(), k1()});
    auto ses = make_ses(sum.injections[0], sum.projections[1]);
    auto out0 = build_proper_resolution(C, sum.module, 3);
    REQUIRE(!out0.obstructed);
    auto got = thm_3_6_construct(C, ses, *out0.res, periodic_k1(3));
    const auto& r = got.output;
    CHECK(r.target.dim == 1);
    CHECK(term_dims(r) == std::vector<std::size_t>{4, 6, 6, 6});
    CHECK(r.exact == TriState::VerifiedYes);
    CHECK(r.terms_in_c == TriState::VerifiedYes);
    CHECK(r.proper == TriState::VerifiedYes);
    CHECK(got.w_sequences.size() == 3);
    CHECK(!got.bridge.has_value());
    // First ladder row 0 -> ker(aug0) -> W_1 -> K1 -> 0.
    CHECK(got.w_sequences[0].B.dim == 3);
    CHECK(got.w_sequences[0].C.dim == 1);
}

TEST_CASE("thm_3_6_construct: socle sequence recovers the periodic window") {
    auto C = free1();
    auto ses = make_ses(soc_inc(), quo());
    auto got = thm_3_6_construct(C, ses, trivial_window(reg1(), 3), periodic_k1(3));
    CHECK(term_dims(got.output) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(got.output.exact == TriState::VerifiedYes);
    CHECK(got.output.proper == TriState::VerifiedYes);
}

TEST_CASE("thm_3_4_construct: coresolves the last term through the duality functor") {
    auto C = free1();
    auto ses = make_ses(soc_inc(), quo());
    auto got = thm_3_4_construct(C, ses, trivial_cowindow(reg1(), 3), coperiodic_k1(3));
    const auto& r = got.output;
    CHECK(r.direction == Direction::Coresolution);
    CHECK(r.target.dim == 1);
    CHECK(r.target.algebra.get() == lambda1().get());
    CHECK(term_dims(r) == std::vector<std::size_t>{2, 2, 2});
    CHECK(r.exact == TriState::VerifiedYes);
    CHECK(r.terms_in_c == TriState::VerifiedYes);
    CHECK(r.proper == TriState::VerifiedYes);
    REQUIRE(got.bridge.has_value());
    CHECK(got.bridge->B.dim == 4);
    CHECK(got.w_sequences.size() == 3);
}

TEST_CASE("thm_3_8_construct: coresolves the first term through the duality functor") {
    auto C = free1();
    auto ses = make_ses(soc_inc(), quo());
    auto got = thm_3_8_construct(C, ses, trivial_cowindow(reg1(), 3), coperiodic_k1(3));
    const auto& r = got.output;
    CHECK(r.direction == Direction::Coresolution);
    CHECK(r.target.dim == 1);
    CHECK(term_dims(r) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(r.exact == TriState::VerifiedYes);
    CHECK(r.proper == TriState::VerifiedYes);
    CHECK(!got.bridge.has_value());
}

TEST_CASE("iterate_construct FirstTerm: length-2 chain with auxiliary sequence") {
    auto C = free1();
    Morphism theta = compose(soc_inc(), quo());  // REG1 -> REG1, image = socle
    Sequence longseq{{soc_inc(), theta, quo()}};
    std::vector<AugmentedResolution> inputs{trivial_window(reg1(), 3),
                                            trivial_window(reg1(), 3), periodic_k1(3)};
    auto got = iterate_construct(IterateMode::FirstTerm, C, longseq, inputs);
    CHECK(got.output.target.dim == 1);
    CHECK(term_dims(got.output) == std::vector<std::size_t>{2, 2});
    CHECK(got.output.exact == TriState::VerifiedYes);
    CHECK(got.output.proper == TriState::VerifiedYes);
    REQUIRE(got.aux.has_value());
    // 0 -> corner -> +C_i[i] -> +C_{i+1}[i] -> C_n[0] -> 0, here 2,4,4,2.
    REQUIRE(got.aux->length() == 3);
    CHECK(got.aux->object(0).dim == 2);
    CHECK(got.aux->object(1).dim == 4);
    CHECK(got.aux->object(2).dim == 4);
    CHECK(got.aux->object(3).dim == 2);
    CHECK(is_exact(padded(*got.aux)).exact);
}

TEST_CASE("iterate_construct LastTerm: split sequence gives the stacked pattern") {
    auto C = free1();
    auto sum = direct_sum({k1(), k1()});
    Sequence longseq{{sum.injections[0], sum.projections[1]}};
    auto out0 = build_proper_resolution(C, sum.module, 3);
    REQUIRE(!out0.obstructed);
    std::vector<AugmentedResolution> inputs{*out0.res, periodic_k1(3)};
    auto got = iterate_construct(IterateMode::LastTerm, C, longseq, inputs);
    CHECK(got.output.target.dim == 1);
    CHECK(term_dims(got.output) == std::vector<std::size_t>{4, 6, 6, 6});
    CHECK(got.output.exact == TriState::VerifiedYes);
    CHECK(!got.aux.has_value());
}

TEST_CASE("iterate_construct LastTerm: non-monic interior map truncates the bottom window") {
    auto C = free1();
    Morphism theta = compose(soc_inc(), quo());
    Sequence longseq{{theta, quo()}};  // REG1 -> REG1 -> K1 -> 0
    std::vector<AugmentedResolution> inputs{trivial_window(reg1(), 3), trivial_window(reg1(), 3)};
    auto got = iterate_construct(IterateMode::LastTerm, C, longseq, inputs);
    CHECK(term_dims(got.output) == std::vector<std::size_t>{2, 2});
    CHECK(got.output.exact == TriState::VerifiedYes);
}

TEST_CASE("iterate_construct CoLastTerm: dual iteration returns a coresolution") {
    auto C = free1();
    Sequence longseq{{soc_inc(), quo()}};  // 0 -> K1 -> REG1 -> K1
    std::vector<AugmentedResolution> inputs{trivial_cowindow(reg1(), 3), coperiodic_k1(3)};
    auto got = iterate_construct(IterateMode::CoLastTerm, C, longseq, inputs);
    CHECK(got.output.direction == Direction::Coresolution);
    CHECK(got.output.target.dim == 1);
    CHECK(got.output.target.algebra.get() == lambda1().get());
    CHECK(term_dims(got.output) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(got.output.exact == TriState::VerifiedYes);
}

TEST_CASE("iterate_construct CoFirstTerm: dual iteration with auxiliary sequence") {
    auto C = free1();
    Sequence longseq{{soc_inc(), quo()}};  // K1 -> REG1 -> K1 -> 0
    std::vector<AugmentedResolution> inputs{trivial_cowindow(reg1(), 3), coperiodic_k1(3)};
    auto got = iterate_construct(IterateMode::CoFirstTerm, C, longseq, inputs);
    CHECK(got.output.direction == Direction::Coresolution);
    CHECK(got.output.target.dim == 1);
    CHECK(term_dims(got.output) == std::vector<std::size_t>{2, 2, 2});
    CHECK(got.output.exact == TriState::VerifiedYes);
    REQUIRE(got.aux.has_value());
    REQUIRE(got.aux->length() == 2);
    CHECK(got.aux->object(0).dim == 2);
    CHECK(got.aux->object(1).dim == 4);
    CHECK(got.aux->object(2).dim == 2);
    CHECK(is_exact(padded(*got.aux)).exact);
}
