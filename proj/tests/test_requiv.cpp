#include <catch2/catch_amalgamated.hpp>

#include "wound/requiv.hpp"

using namespace wound;

namespace {
CurveSpec endo1_3() {
    auto f3 = prime_field(3);
    return make_spec(CurveVariant::endo1, 3, f3, 1, 1, GF::one(f3), GF::one(f3));
}

RingCtx<KU> ku_ctx(const FieldPtr& f) {
    KField t = KField::variable(GF::zero(f), 't');
    return RingCtx<KU>{KU::constant(t, 'u'),
                       [f](const GF& c) { return KU::constant(KField::constant(c, 't'), 'u'); }};
}
} // namespace

TEST_CASE("rational map validation") {
    auto spec = endo1_3();
    auto kctx = ctx_ratfunc(spec.k0);
    auto vctx = ctx_lift_ratfunc(kctx, 'v');
    auto zero = RatFunc<KField>::zero(kctx.zero(), 'v');
    CHECK_NOTHROW(make_rational_map(spec, {zero, zero}, kctx));

    auto v = RatFunc<KField>::variable(kctx.zero(), 'v');
    CHECK_THROWS_AS(make_rational_map(spec, {v, v}, kctx), config_error);
    CHECK_THROWS_AS(make_rational_map(spec, {zero}, kctx), config_error);
    // ambient targets accept anything
    CHECK_NOTHROW(make_rational_map(std::nullopt, {v, v * v}, kctx));
}

TEST_CASE("map evaluation and poles") {
    auto f3 = prime_field(3);
    auto kuctx = ku_ctx(f3);
    auto u = parse_kuv(f3, "u");
    auto v = parse_kuv(f3, "v");
    auto f = make_rational_map(std::nullopt, {u * v, u * u * v * v}, kuctx);

    auto at1 = evaluate_map(f, kuctx.one());
    REQUIRE(at1.has_value());
    CHECK((*at1)[0] == parse_ku(f3, "u"));
    CHECK((*at1)[1] == parse_ku(f3, "u^2"));

    auto pole = make_rational_map(std::nullopt, {v.inv()}, kuctx);
    CHECK_FALSE(evaluate_map(pole, kuctx.zero()).has_value());
    CHECK(evaluate_map(pole, kuctx.one()).has_value());
}

TEST_CASE("r-links and chains") {
    auto f3 = prime_field(3);
    auto kuctx = ku_ctx(f3);
    auto u = parse_kuv(f3, "u");
    auto v = parse_kuv(f3, "v");
    auto f = make_rational_map(std::nullopt, {u * v, u * u * v * v}, kuctx);
    std::vector<KU> zero2 = {parse_ku(f3, "0"), parse_ku(f3, "0")};
    std::vector<KU> zu = {parse_ku(f3, "u"), parse_ku(f3, "u^2")};

    CHECK(check_r_link(f, zero2, zu).pass());

    auto pole = make_rational_map(std::nullopt, {v.inv(), v.inv()}, kuctx);
    CHECK_FALSE(check_r_link(pole, zero2, zu).pass());

    // two-step chain: 0 -> z(u) by the homotopy, then a constant link z -> z
    auto cst = make_rational_map(std::nullopt,
                                 {RatFunc<KU>::constant(zu[0], 'v'),
                                  RatFunc<KU>::constant(zu[1], 'v')},
                                 kuctx);
    RChainWitness<KU> w{{zero2, zu, zu}, {f, cst}};
    CHECK(check_chain(w, zero2, zu).pass);

    RChainWitness<KU> broken{{zero2, zero2, zu}, {f, cst}};
    auto rep = check_chain(broken, zero2, zu);
    CHECK_FALSE(rep.pass);
    CHECK(rep.fail_index == 0);
}

TEST_CASE("bounded constancy search") {
    auto spec = endo1_3();
    auto rep = constancy_search(spec, 1, 2);
    CHECK(rep.only_zero_map);
    CHECK(rep.only_constant_maps);
    REQUIRE(rep.maps.size() == 1);

    auto f3 = prime_field(3);
    auto g1 = make_spec(CurveVariant::gabber1, 3, f3, 1, 1, GF::one(f3), GF::one(f3));
    auto rep2 = constancy_search(g1, 1, 1);
    CHECK(rep2.only_constant_maps);
    CHECK(rep2.maps.size() >= 1);

    auto amb = constancy_search_ambient(f3, 1, 1);
    CHECK(amb.nonconstant_count > 0);

    CHECK_THROWS_AS(constancy_search(spec, 1, 2, 10), budget_error);
}

TEST_CASE("homotopy in u and v") {
    auto f3 = prime_field(3);
    auto kuctx = ku_ctx(f3);
    std::vector<KU> z = {parse_ku(f3, "u"), parse_ku(f3, "u^2")};
    // phi'(1) = z and phi'(0) = z(0) are verified inside
    auto f = homotopy_uv(z, std::nullopt, kuctx);
    CHECK(f.coords[0] == parse_kuv(f3, "u*v"));
    CHECK(f.coords[1] == parse_kuv(f3, "u^2*v^2"));

    std::vector<KU> c = {parse_ku(f3, "t+1")};
    auto fc = homotopy_uv(c, std::nullopt, kuctx);
    CHECK(fc.coords[0] == parse_kuv(f3, "t+1"));

    std::vector<KU> bad = {parse_ku(f3, "1/u")};
    CHECK_THROWS_AS(homotopy_uv(bad, std::nullopt, kuctx), config_error);
}

TEST_CASE("specialization at u = u0") {
    auto f3 = prime_field(3);
    auto kuctx = ku_ctx(f3);
    auto kctx = ctx_ratfunc(f3);
    std::vector<KU> zero2 = {parse_ku(f3, "0"), parse_ku(f3, "0")};
    std::vector<KU> zu = {parse_ku(f3, "u"), parse_ku(f3, "u^2")};
    auto f = homotopy_uv(zu, std::nullopt, kuctx);
    auto cst = make_rational_map(std::nullopt,
                                 {RatFunc<KU>::constant(zu[0], 'v'),
                                  RatFunc<KU>::constant(zu[1], 'v')},
                                 kuctx);
    RChainWitness<KU> w{{zero2, zu, zu}, {f, cst}};

    KField one = KField::one(GF::zero(f3), 't');
    auto sw = specialize_u(w, one, kctx);
    std::vector<KField> x0 = {one.zero_like(), one.zero_like()};
    std::vector<KField> y0 = {one, one};
    CHECK(check_chain(sw, x0, y0).pass);

    // u0 hitting a denominator is rejected by name
    auto polar = make_rational_map(std::nullopt, {parse_kuv(f3, "1/(u+2)")}, kuctx);
    RChainWitness<KU> wp{{{parse_ku(f3, "1/(u+2)")}, {parse_ku(f3, "1/(u+2)")}}, {polar}};
    CHECK_THROWS_AS(specialize_u(wp, one, kctx), config_error);
    CHECK(pick_u0(wp, kctx, f3) == one.zero_like());
}

TEST_CASE("u-adic fixed point solving") {
    auto spec = endo1_3();
    auto f3 = prime_field(3);
    auto y0 = parse_series(f3, "u+O(u^81)");

    auto lr = laurent_point(spec, y0, 81);
    CHECK(lr.verified);
    CHECK(lr.point().x == parse_series(f3, "u^3+t*u^9+t^4*u^27+O(u^81)"));
    CHECK(lr.defect_valuations == std::vector<int>{3, 9, 27});

    auto lr27 = laurent_point(spec, parse_series(f3, "u+O(u^27)"), 27);
    CHECK(lr27.point().x == parse_series(f3, "u^3+t*u^9+O(u^27)"));

    auto z = laurent_point(spec, parse_series(f3, "O(u^27)"), 27);
    CHECK_FALSE(z.point().x.valuation().has_value());
    CHECK(z.iterations == 0);

    CHECK_THROWS_AS(laurent_point(spec, parse_series(f3, "u+O(u^9)"), 27), config_error);
    CHECK_THROWS_AS(laurent_point(spec, parse_series(f3, "1+u+O(u^27)"), 27), config_error);
}

TEST_CASE("chain element syntax round trips") {
    auto f3 = prime_field(3);
    auto x = parse_kuv(f3, "(u*v^2+t)/(v+1)");
    CHECK(to_text(x) == "(u*v^2+t)/(v+1)");
    CHECK(parse_kuv(f3, to_text(x)) == x);
    auto y = parse_ku(f3, "(t*u+2)/(u^2+t)");
    CHECK(parse_ku(f3, to_text(y)) == y);
}
