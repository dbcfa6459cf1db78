#include <catch2/catch_amalgamated.hpp>

#include "wound/norm.hpp"
#include "wound/parse.hpp"

using namespace wound;

TEST_CASE("constant extension construction") {
    CHECK_NOTHROW(make_constant_extension(prime_field(3), gf9()));
    CHECK_NOTHROW(make_constant_extension(prime_field(2), gf8()));
    CHECK_THROWS_AS(make_constant_extension(prime_field(3), gf8()), config_error);
    CHECK_THROWS_AS(make_constant_extension(gf9(), gf9()), config_error);
}

TEST_CASE("galois conjugation") {
    auto e9 = make_constant_extension(prime_field(3), gf9());
    auto f9 = gf9();
    GF alpha = GF::gen(f9); // alpha^2 = -1
    CHECK(alpha * alpha == -GF::one(f9));
    CHECK(sigma_conjugate(e9, 1, alpha) == -alpha);

    auto r = [&](const std::string& s) { return parse_ratfunc(f9, 't', s); };
    CHECK(sigma_conjugate(e9, 1, r("t^3+t")) == r("t^3+t"));
    CHECK(sigma_conjugate(e9, 1, r("z*t")) == -r("z*t"));
    CHECK(galois_fixed(e9, r("(t+1)/(t^2+2)")));

    auto e4 = make_constant_extension(prime_field(2), gf4());
    GF zeta = GF::gen(gf4());
    CHECK(sigma_conjugate(e4, 1, zeta) == zeta + GF::one(gf4()));

    // elements over the wrong constants are rejected
    CHECK_THROWS_AS(sigma_conjugate(e9, 1, GF::one(prime_field(3))), config_error);
}

TEST_CASE("norm values") {
    auto e = make_constant_extension(prime_field(3), gf9());
    auto f9 = gf9();
    auto r = [&](const std::string& s) { return parse_ratfunc(f9, 't', s); };
    CHECK(norm_coordinate(e, r("z")).is_zero()); // alpha + alpha^3 = 0
    CHECK(norm_coordinate(e, r("1")) == r("2"));
    CHECK(norm_coordinate(e, r("z+t")) == r("2*t"));
}

TEST_CASE("norm agrees with the trace oracle") {
    auto e = make_constant_extension(prime_field(3), gf9());
    std::mt19937_64 rng(47);
    for (int i = 0; i < 100; ++i) {
        GF c = detail::random_gf(rng, e.ext);
        REQUIRE(norm_coordinate(e, c) == trace_oracle(e, c));
    }
    auto e8 = make_constant_extension(prime_field(2), gf8());
    for (int i = 0; i < 100; ++i) {
        GF c = detail::random_gf(rng, e8.ext);
        REQUIRE(norm_coordinate(e8, c) == trace_oracle(e8, c));
    }
}

TEST_CASE("norm laws on the additive group") {
    auto e9 = make_constant_extension(prime_field(3), gf9());
    CHECK(check_norm_laws_ga(e9, 100, 53).pass());
    auto e8 = make_constant_extension(prime_field(2), gf8());
    CHECK(check_norm_laws_ga(e8, 100, 53).pass());
}

TEST_CASE("norm laws on curve groups") {
    auto e9 = make_constant_extension(prime_field(3), gf9());
    auto s9 = make_spec(CurveVariant::endo1, 3, gf9(), 1, 1, GF::one(gf9()), GF::one(gf9()));
    CHECK(check_norm_laws_curve(e9, s9, 25, 59).pass());

    auto e8 = make_constant_extension(prime_field(2), gf8());
    auto s8 = make_spec(CurveVariant::endo1, 2, gf8(), 2, 2, GF::one(gf8()), GF::one(gf8()));
    CHECK(check_norm_laws_curve(e8, s8, 25, 59).pass());
}

TEST_CASE("norm is multiplication by r when r is the characteristic") {
    // F_27 over F_3: r = 3 = p, so the norm kills base-rational points
    auto f27 = make_field(3, {1, 2, 0, 1}, "F27");
    auto e = make_constant_extension(prime_field(3), f27);
    REQUIRE(e.r == 3);
    auto r = [&](const std::string& s) { return parse_ratfunc(f27, 't', s); };
    CHECK(norm_coordinate(e, r("t^2+1")).is_zero());
    CHECK(norm_coordinate(e, r("t")).is_zero());
}

TEST_CASE("non-commutative targets are rejected") {
    auto f3 = prime_field(3);
    auto h = make_pairing(PairingKind::endo, 3, 1, 1, f3);
    auto sampler = make_source_sampler(h.source, default_y_values(h.source, 2));
    ExtGroup<EElt> G{h, sampler.ctx};
    auto e = make_constant_extension(prime_field(3), gf9());
    CHECK_THROWS_AS(norm_point(e, G, G.identity()), config_error);
}
