#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homres/approx.hpp"
#include "homres/fixtures.hpp"

using namespace homres;
namespace fx = homres::fixtures;

static Subcategory add_reg1() { return make_subcategory("add(REG1)", {fx::reg1()}); }
static Subcategory add_k1() { return make_subcategory("add(K1)", {fx::k1()}); }

TEST_CASE("add membership") {
    auto two = direct_sum({fx::reg1(), fx::reg1()}).module;
    CHECK(is_in_add(add_reg1(), two).yes);
    CHECK_FALSE(is_in_add(add_reg1(), fx::k1()).yes);
    CHECK(is_in_add(make_subcategory("C", {fx::k1(), fx::reg1()}), fx::k1()).yes);

    auto mem = is_in_add(add_reg1(), fx::reg1());
    REQUIRE(mem.yes);
    REQUIRE(mem.section.has_value());
    CHECK(compose(mem.eval, *mem.section).matrix == Matrix::identity(2, 2));
    CHECK(is_in_add(add_k1(), zero_module(fx::lambda1())).yes);
}

TEST_CASE("right approximation") {
    auto ra = right_approx(add_reg1(), fx::k1());
    CHECK(ra.map.source.dim == 2);  // Hom(REG1, K1) has dimension 1
    CHECK(ra.covers);
    CHECK(validate(ra.map).ok);

    auto self = right_approx(add_reg1(), fx::reg1());
    CHECK(self.covers);

    auto bad = right_approx(add_k1(), fx::reg1());
    CHECK_FALSE(bad.covers);
    CHECK(rank(bad.map.matrix) == 1);  // lands in the socle

    // Factorization property: every hom from a generator factors through it.
    for (const auto& g : hom_basis(fx::reg1(), fx::k1())) {
        CHECK(lift_through_epi(ra.map, g).has_value());
    }
}

TEST_CASE("left approximation") {
    auto la = left_approx(add_reg1(), fx::k1());
    CHECK(la.map.target.dim == 2);
    CHECK(la.covers);
    CHECK(validate(la.map).ok);

    auto z = left_approx(add_reg1(), zero_module(fx::lambda1()));
    CHECK(z.covers);

    auto bad = left_approx(add_k1(), fx::reg1());
    CHECK_FALSE(bad.covers);
    CHECK(kernel(bad.map).module.dim == 1);
}

TEST_CASE("hom-exactness of sequences") {
    Sequence ses = padded(Sequence{{fx::soc_inc(), fx::quo()}});

    CHECK(is_hom_from_C_exact(add_reg1(), ses).ok);
    auto fail = is_hom_from_C_exact(add_k1(), ses);
    CHECK_FALSE(fail.ok);
    CHECK(fail.failure_position >= 1);

    CHECK(is_hom_into_C_exact(add_reg1(), ses).ok);

    // Split sequences stay exact under any additive functor.
    auto sum = direct_sum({fx::k1(), fx::reg1()});
    Sequence split = padded(Sequence{{sum.injections[0], sum.projections[1]}});
    CHECK(is_hom_from_C_exact(add_k1(), split).ok);
    CHECK(is_hom_into_C_exact(add_k1(), split).ok);
}

TEST_CASE("hom-into exactness failure over the path algebra") {
    // Non-split 0 -> SB -> PA -> SA -> 0.
    Matrix inc(2, 2, 1);
    inc.at(1, 0) = 1;
    Matrix pr(2, 1, 2);
    pr.at(0, 0) = 1;
    Morphism i{fx::sb(), fx::pa(), inc}, q{fx::pa(), fx::sa(), pr};
    REQUIRE(validate(i).ok);
    REQUIRE(validate(q).ok);
    Sequence ses = padded(Sequence{{i, q}});
    REQUIRE(is_exact(ses).exact);
    auto r = is_hom_into_C_exact(make_subcategory("add(SB)", {fx::sb()}), ses);
    CHECK_FALSE(r.ok);
}

TEST_CASE("ext tables") {
    auto t0 = ext_dims(fx::reg1(), fx::k1(), 5);
    CHECK(t0.dims == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});

    auto t1 = ext_dims(fx::k1(), fx::k1(), 3);
    CHECK(t1.dims == std::vector<std::size_t>{1, 1, 1, 1});

    auto ab = ext_dims(fx::sa(), fx::sb(), 2);
    auto ba = ext_dims(fx::sb(), fx::sa(), 2);
    CHECK(ab.dims[1] + ba.dims[1] == 1);
    CHECK(ab.dims[2] == 0);
    CHECK(ba.dims[2] == 0);

    // Stability under deeper truncation.
    auto t1b = ext_dims(fx::k1(), fx::k1(), 4);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(t1.dims[i] == t1b.dims[i]);

    auto z = ext_dims(zero_module(fx::lambda1()), fx::k1(), 2);
    CHECK(z.dims == std::vector<std::size_t>{0, 0, 0});

    auto l2 = ext_dims(fx::k2(), fx::k2(), 2);
    CHECK(l2.dims[0] == 1);
    CHECK(l2.dims[1] == 1);  // non-split extension by M2
}

TEST_CASE("strong exactness") {
    // A free resolution window REG1 -> REG1 -> K1 is strongly exact for add(REG1).
    Morphism x_mult{fx::reg1(), fx::reg1(), fx::soc_inc().matrix * fx::quo().matrix};
    REQUIRE(validate(x_mult).ok);
    Sequence res{{x_mult, fx::quo()}};
    CHECK(is_strongly_exact(add_reg1(), res, Side::FromC).ok);

    // Split resolution of K1 by add(K1): proper but not strongly proper.
    auto sum = direct_sum({fx::k1(), fx::k1()});
    Sequence split{{sum.injections[0], sum.projections[1]}};
    Sequence aug{{compose(sum.projections[1], sum.injections[0]),  // placeholder
                  sum.projections[1]}};
    // View 0 -> K1 -> K1+K1 -> K1 (-> 0) as a length-1 proper resolution of K1
    // augmented by the projection; the interior image is K1 itself.
    Sequence res_k1{{sum.injections[0], sum.projections[1]}};
    auto strong = is_strongly_exact(add_k1(), res_k1, Side::FromC);
    CHECK_FALSE(strong.ok);
    CHECK(strong.ext_dim == 1);

    auto costrong = is_strongly_exact(add_k1(), res_k1, Side::IntoC);
    CHECK_FALSE(costrong.ok);

    // Resolution of the zero module.
    Sequence zres{{zero_morphism(zero_module(fx::lambda1()), zero_module(fx::lambda1()))}};
    CHECK(is_strongly_exact(add_k1(), zres, Side::FromC).ok);
}

TEST_CASE("strongly exact implies hom-exact on the window") {
    Morphism x_mult{fx::reg1(), fx::reg1(), fx::soc_inc().matrix * fx::quo().matrix};
    Sequence res{{x_mult, x_mult, fx::quo()}};
    REQUIRE(is_strongly_exact(add_reg1(), res, Side::FromC).ok);
    CHECK(is_hom_from_C_exact(add_reg1(), res).ok);
}

TEST_CASE("dual subcategory") {
    auto D = dual_subcategory(add_reg1());
    CHECK(D.T.dim == 2);
    CHECK(validate(D.T).ok);
    // Self-injective: the dual of the regular module is free again.
    CHECK(find_isomorphism(D.T, regular_module(D.T.algebra)).has_value());
}
