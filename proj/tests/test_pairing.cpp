#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wound/pairing.hpp"
#include "wound/parse.hpp"

using namespace wound;

TEST_CASE("pairing construction") {
    auto f3 = prime_field(3);
    CHECK_NOTHROW(make_pairing(PairingKind::endo, 3, 1, 1, f3));
    CHECK_NOTHROW(make_pairing(PairingKind::twisted, 2, 1, 1, gf4(), GF::gen(gf4())));
    CHECK_THROWS_AS(make_pairing(PairingKind::twisted, 3, 1, 1, prime_field(3)), config_error);
    CHECK_THROWS_AS(make_pairing(PairingKind::endo, 3, 2, 1, f3), config_error);
    // twisted needs m odd
    CHECK_THROWS_AS(make_pairing(PairingKind::twisted, 2, 2, 2, gf4(), GF::gen(gf4())),
                    config_error);
}

TEST_CASE("pairing evaluation identities") {
    auto f3 = prime_field(3);
    auto h = make_pairing(PairingKind::endo, 3, 1, 1, f3);
    auto sampler = make_source_sampler(h.source, default_y_values(h.source, 2));
    std::mt19937_64 rng(23);
    auto P = sampler.sample(rng, std::nullopt, 0);
    auto zero = curve_zero(h.source, sampler.ctx);

    // h(P, 0) = h(0, P) = (0, 0)
    auto [ax, ay] = pairing_eval(h, P, zero, sampler.ctx);
    CHECK(ax.is_zero());
    CHECK(ay.is_zero());
    auto [bx, by] = pairing_eval(h, zero, P, sampler.ctx);
    CHECK(bx.is_zero());
    CHECK(by.is_zero());

    // with m = n = 1 the second component is x*y' - y*x'
    auto [hx, hy] = pairing_symbolic(h);
    GF z = GF::zero(f3);
    auto var = [&](int i) { return MPoly<GF>::variable(z, 4, i); };
    CHECK(hy == var(0) * var(3) - var(1) * var(2));
    CHECK(hx == frobenius_power(var(0), 1) * var(2) - var(0) * frobenius_power(var(2), 1));

    // the gabber pairing is alternating: h(g, g) = 0 symbolically
    auto g = make_pairing(PairingKind::gabber, 3, 1, 1, f3);
    auto [gx, gy] = pairing_symbolic(g);
    std::vector<MPoly<GF>> pt = {var(0), var(1)};
    CHECK(detail::subst_pair(gx, pt, pt).is_zero());
    CHECK(detail::subst_pair(gy, pt, pt).is_zero());
}

TEST_CASE("biadditivity and cocycle identities") {
    auto f3 = prime_field(3);
    for (auto kind : {PairingKind::endo, PairingKind::gabber}) {
        auto h = make_pairing(kind, 3, 1, 1, f3);
        CHECK(check_biadditive(h).pass);
        CHECK(check_cocycle(h).pass);
    }
    auto tw = make_pairing(PairingKind::twisted, 2, 1, 1, gf4(), GF::gen(gf4()));
    CHECK(check_biadditive(tw).pass);
    CHECK(check_cocycle(tw).pass);
}

TEST_CASE("symmetry classification") {
    auto f3 = prime_field(3);
    auto endo3 = check_symmetry(make_pairing(PairingKind::endo, 3, 1, 1, f3));
    CHECK_FALSE(endo3.symmetric);
    CHECK_FALSE(endo3.difference_x.empty());

    auto f2 = prime_field(2);
    auto endo2 = check_symmetry(make_pairing(PairingKind::endo, 2, 1, 1, f2));
    CHECK(endo2.symmetric);

    auto gab = check_symmetry(make_pairing(PairingKind::gabber, 3, 1, 1, f3));
    CHECK_FALSE(gab.symmetric);

    auto tw = check_symmetry(make_pairing(PairingKind::twisted, 2, 1, 1, gf4(), GF::gen(gf4())));
    CHECK_FALSE(tw.symmetric);
}

TEST_CASE("image containment in the target curve") {
    auto f3 = prime_field(3);
    auto h = make_pairing(PairingKind::endo, 3, 1, 1, f3);
    auto rep = check_containment(h, 100, 31);
    CHECK(rep.failures == 0);

    auto g = make_pairing(PairingKind::gabber, 3, 1, 1, f3);
    CHECK(check_containment(g, 100, 31).failures == 0);

    // deliberately wrong target curve: containment must fail
    auto wrong = check_containment(h, 20, 31, g.target);
    CHECK(wrong.failures > 0);
}

TEST_CASE("extension group laws") {
    auto f3 = prime_field(3);
    auto h = make_pairing(PairingKind::endo, 3, 1, 1, f3);
    auto sampler = make_source_sampler(h.source, default_y_values(h.source, 2));
    ExtGroup<EElt> G{h, sampler.ctx};
    std::mt19937_64 rng(37);
    auto zero1 = curve_zero(h.target, sampler.ctx);
    for (int i = 0; i < 100; ++i) {
        auto A = G.elt(zero1, sampler.sample(rng, std::nullopt, 0));
        auto B = G.elt(zero1, sampler.sample(rng, std::nullopt, 0));
        auto C = G.elt(zero1, sampler.sample(rng, std::nullopt, 0));
        REQUIRE(G.mul(G.mul(A, B), C) == G.mul(A, G.mul(B, C)));
        REQUIRE(G.mul(A, G.identity()) == A);
        REQUIRE(G.mul(G.identity(), A) == A);
        REQUIRE(G.mul(A, G.inv(A)) == G.identity());
        REQUIRE(G.commutator(A, B) == G.commutator_formula(A, B));
        // centrality of the first factor
        auto c = G.elt(B.g1 + G.commutator(A, B).g1, curve_zero(h.source, sampler.ctx));
        REQUIRE(G.mul(c, A) == G.mul(A, c));
        // projection to the second factor is a homomorphism
        REQUIRE(G.mul(A, B).g2 == A.g2 + B.g2);
    }
}

TEST_CASE("noncommutativity witness") {
    auto f3 = prime_field(3);
    auto h = make_pairing(PairingKind::endo, 3, 1, 1, f3);
    auto w = noncommutativity_witness(h);
    CHECK(w.found);
    REQUIRE(w.comm.has_value());
    CHECK_FALSE(w.comm->is_identity());
    CHECK(w.comm->g2.is_zero());
    CHECK(w.algebra->num_gens() == 2);
    CHECK(w.algebra->gen_degree(0) == 9);
    CHECK(w.algebra->gen_degree(1) == 9);

    // a symmetric pairing admits no witness
    auto sym = make_pairing(PairingKind::endo, 2, 1, 1, prime_field(2));
    CHECK_THROWS_AS(noncommutativity_witness(sym), verify_error);
}
