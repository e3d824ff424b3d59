#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "g2end/covers.hpp"

using namespace g2end;
using namespace g2end::covers;

namespace {

const std::string kCoverDir = std::string(G2END_TEST_DATA_DIR) + "/covers/";

}  // namespace

TEST_CASE("number field element arithmetic") {
    auto f = NumberField::create(IntPoly{-2, 0, 1});  // Q(sqrt 2)
    NFElem t = NFElem::gen(f);
    NFElem two = NFElem::from_rat(f, Rat(2));
    CHECK(t * t == two);
    NFElem x = NFElem::from_rat(f, Rat(3)) + t;  // 3 + sqrt 2
    NFElem inv = x.inverse();
    CHECK(x * inv == NFElem::from_rat(f, Rat(1)));
    CHECK(x.conjugate().conjugate() == x);
    CHECK((x * x.conjugate()) == NFElem::from_rat(f, Rat(7)));  // norm 9-2
    CHECK_THROWS_AS(NFElem::zero(f).inverse(), Error);
    CHECK_THROWS_AS(NumberField::create(IntPoly{-1, 0, 1}), Error);     // reducible
    CHECK_THROWS_AS(NumberField::create(IntPoly{1, 1, 1, 1, 1, 1}), Error);  // degree 5
}

TEST_CASE("toy cover: y^2 = x^6+1 onto z^2 = w^3+1") {
    CoverInput ci = load_cover_file(kCoverDir + "toy_x6.cov");
    CHECK(verify_cover(ci.f, ci.map));
    CHECK(map_degree(ci.f, ci.map) == 2);
    Pullback pb = pullback_differential(ci.f, ci.map);
    CHECK(pb.alpha == NFElem::zero(ci.field));
    CHECK(pb.beta == NFElem::from_rat(ci.field, Rat(2)));
}

TEST_CASE("the degree-7 cover verifies; a mutated coefficient is rejected") {
    CoverInput ci = load_cover_file(kCoverDir + "deg7.cov");
    CHECK(verify_cover(ci.f, ci.map));
    CHECK(map_degree(ci.f, ci.map) == 7);
    Pullback pb = pullback_differential(ci.f, ci.map);
    // w'/r reduces to x + 7
    CHECK(pb.alpha == NFElem::from_rat(ci.field, Rat(7)));
    CHECK(pb.beta == NFElem::from_rat(ci.field, Rat(1)));

    CoverMap broken = ci.map;
    broken.w_num.c[3] = broken.w_num.c[3] + NFElem::from_rat(ci.field, Rat(1));
    CHECK(!verify_cover(ci.f, broken));
    CHECK_THROWS_AS(map_degree(ci.f, broken), Error);
}

TEST_CASE("cover verification is invariant under common rescaling") {
    CoverInput ci = load_cover_file(kCoverDir + "deg7.cov");
    FieldPoly common{ci.field, {NFElem::from_rat(ci.field, Rat(3)), NFElem::from_rat(ci.field, Rat(5))}};
    CoverMap scaled = ci.map;
    scaled.w_num = scaled.w_num * common;
    scaled.w_den = scaled.w_den * common;
    CHECK(verify_cover(ci.f, scaled));
    CoverMap scaled2 = ci.map;
    scaled2.r_num = scaled2.r_num * common;
    scaled2.r_den = scaled2.r_den * common;
    CHECK(verify_cover(ci.f, scaled2));
}

TEST_CASE("the 1088.a pair over Q(sqrt 2): conjugate map, independence") {
    CoverInput ci = load_cover_file(kCoverDir + "split1088.cov");
    CHECK(verify_cover(ci.f, ci.map));
    CHECK(map_degree(ci.f, ci.map) == 2);

    // galois stability: the conjugate map covers the conjugate curve
    CoverMap conj = conjugate(ci.map);
    CHECK(verify_cover(ci.f, conj));  // f has rational coefficients

    Pullback p1 = pullback_differential(ci.f, ci.map);
    Pullback p2 = pullback_differential(ci.f, conj);
    // computed independently with exact algebra: -2x - 2 -+ 2 sqrt 2
    auto mtwo = NFElem::from_rat(ci.field, Rat(-2));
    CHECK(p1.beta == mtwo);
    CHECK(p2.beta == mtwo);
    CHECK(p1.alpha == mtwo - NFElem::gen(ci.field) * NFElem::from_rat(ci.field, Rat(2)));
    CHECK(p1.alpha.conjugate() == p2.alpha);
    CHECK(independence(p1, p2));
    // determinant alpha1 beta2 - alpha2 beta1 = 8 sqrt 2
    NFElem det = p1.alpha * p2.beta - p2.alpha * p1.beta;
    CHECK(det == NFElem::gen(ci.field) * NFElem::from_rat(ci.field, Rat(8)));
}

TEST_CASE("independence basics") {
    auto q = NumberField::rationals();
    Pullback a{NFElem::from_rat(q, Rat(1)), NFElem::from_rat(q, Rat(0))};
    Pullback b{NFElem::from_rat(q, Rat(0)), NFElem::from_rat(q, Rat(1))};
    CHECK(independence(a, b));
    Pullback c{NFElem::from_rat(q, Rat(1)), NFElem::from_rat(q, Rat(2))};
    Pullback d{NFElem::from_rat(q, Rat(2)), NFElem::from_rat(q, Rat(4))};
    CHECK(!independence(c, d));
}

TEST_CASE("pullback scales inversely with z") {
    // scaling r by c scales the pullback by 1/c
    CoverInput ci = load_cover_file(kCoverDir + "toy_x6.cov");
    CoverMap scaled = ci.map;
    // z' = 2z covers z'^2 = w^3... only after adjusting the target; instead
    // compare the raw quotient w'/r directly: double r -> half pullback
    scaled.r_num = scaled.r_num * NFElem::from_rat(ci.field, Rat(2));
    // (w,2y) is a cover of z^2 = (w^3+1)*4 which is not short Weierstrass;
    // check the algebraic statement on the reduced quotient instead
    FieldPoly num = (scaled.w_num.derivative() * scaled.w_den -
                     scaled.w_num * scaled.w_den.derivative()) *
                    scaled.r_den;
    FieldPoly den = scaled.w_den * scaled.w_den * scaled.r_num;
    auto [quot, rem] = num.divrem(den);
    CHECK(rem.is_zero());
    REQUIRE(quot.degree() == 1);
    CHECK(quot.c[1] == NFElem::from_rat(ci.field, Rat(1)));  // was 2
}

TEST_CASE("input format errors") {
    std::istringstream missing("f: 1, 0, 1\nA: 0\nB: 1\nw_num: 1\nw_den: 1\nr_num: 1\n");
    CHECK_THROWS_AS(load_cover(missing), Error);
    std::istringstream badfield(
        "minpoly: -2, 0, 1\nf: 5, 6, 11, 8, 7, 2, 1\nA: 1*t^5\nB: 0\nw_num: 1\nw_den: 1\nr_num: "
        "1\nr_den: 1\n");
    CHECK_THROWS_AS(load_cover(badfield), Error);
}
