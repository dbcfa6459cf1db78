#ifndef WOUND_REQUIV_HPP
#define WOUND_REQUIV_HPP

// R-equivalence machinery: rational maps P^1 -> X, R-links and chains,
// exhaustive bounded-bidegree constancy search into curve groups, the
// u-homotopy z(uv) with specialization at u = u0, and u-adic fixed-point
// solving in k[[u]]/u^N.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wound/curves.hpp"
#include "wound/errors.hpp"
#include "wound/format.hpp"
#include "wound/pairing.hpp"
#include "wound/parse.hpp"

namespace wound {

// k(u) on top of k = F_q(t), and k(u)(v) on top of that
using KU = RatFunc<KField>;

// A rational map P^1 -> X with coordinates in K(v). When a curve target is
// declared the defining equation holds identically in K(v).
template <class K>
struct RationalMap {
    std::optional<CurveSpec> target;
    std::vector<RatFunc<K>> coords; // in the variable v
    RingCtx<K> kctx;                // how t and scalars read in K
};

template <class K>
RationalMap<K> make_rational_map(std::optional<CurveSpec> target,
                                 std::vector<RatFunc<K>> coords, const RingCtx<K>& kctx) {
    if (coords.empty()) throw config_error("make_rational_map: no coordinates");
    if (target) {
        if (coords.size() != 2)
            throw config_error("make_rational_map: curve targets need 2 coordinates");
        auto vctx = ctx_lift_ratfunc(kctx, coords[0].num().var());
        auto res = curve_residual(*target, coords[0], coords[1], vctx);
        if (!res.is_zero())
            throw config_error("make_rational_map: target equation violated, residual " +
                               to_text(res));
    }
    return RationalMap<K>{std::move(target), std::move(coords), kctx};
}

// substitution v = v0; undefined iff some reduced denominator vanishes
template <class K>
std::optional<std::vector<K>> evaluate_map(const RationalMap<K>& f, const K& v0) {
    std::vector<K> out;
    for (const auto& c : f.coords) {
        auto v = c.eval(v0);
        if (!v) return std::nullopt;
        out.push_back(std::move(*v));
    }
    return out;
}

struct LinkReport {
    bool defined_at_0 = false, defined_at_1 = false;
    bool matches_x = false, matches_y = false;
    bool pass() const { return defined_at_0 && defined_at_1 && matches_x && matches_y; }
};

// f(0) = x and f(1) = y
template <class K>
LinkReport check_r_link(const RationalMap<K>& f, const std::vector<K>& x,
                        const std::vector<K>& y) {
    LinkReport rep;
    auto at0 = evaluate_map(f, f.kctx.zero());
    auto at1 = evaluate_map(f, f.kctx.one());
    rep.defined_at_0 = at0.has_value();
    rep.defined_at_1 = at1.has_value();
    if (at0) rep.matches_x = *at0 == x;
    if (at1) rep.matches_y = *at1 == y;
    return rep;
}

template <class K>
struct RChainWitness {
    std::vector<std::vector<K>> points; // z_1, ..., z_n
    std::vector<RationalMap<K>> maps;   // f_1, ..., f_{n-1}
};

struct ChainReport {
    bool pass = false;
    int fail_index = -1; // which link broke, -1 if endpoints or shape
    std::string detail;
};

template <class K>
ChainReport check_chain(const RChainWitness<K>& w, const std::vector<K>& x,
                        const std::vector<K>& y) {
    ChainReport rep;
    if (w.points.size() < 1 || w.maps.size() + 1 != w.points.size()) {
        rep.detail = "witness shape mismatch";
        return rep;
    }
    if (w.points.front() != x) { rep.detail = "z_1 != x"; return rep; }
    if (w.points.back() != y) { rep.detail = "z_n != y"; return rep; }
    for (size_t i = 0; i < w.maps.size(); ++i) {
        auto link = check_r_link(w.maps[i], w.points[i], w.points[i + 1]);
        if (!link.pass()) {
            rep.fail_index = static_cast<int>(i);
            rep.detail = "link " + std::to_string(i) + " failed";
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

// ---- bounded-bidegree constancy search ----

struct ConstancyReport {
    int dt = 0, dv = 0;
    uint64_t pair_candidates = 0;
    std::vector<std::pair<std::string, std::string>> maps; // (x, y) coordinate texts
    bool only_zero_map = false;
    bool only_constant_maps = false;
    bool ambient_mode = false;
    uint64_t nonconstant_count = 0; // ambient control runs
};

namespace detail {
// all polynomials in F_q[t][v] with deg_t <= dt, deg_v <= dv; outer variable v
inline std::vector<Poly<Poly<GF>>> bivariate_candidates(const FieldPtr& f, int dt, int dv) {
    auto tpolys = polys_up_to_degree(f, dt);
    Poly<GF> tzero = Poly<GF>::zero(GF::zero(f), 't');
    std::vector<Poly<Poly<GF>>> out;
    std::vector<size_t> idx(static_cast<size_t>(dv) + 1, 0);
    for (;;) {
        std::vector<Poly<GF>> coeffs;
        for (size_t i = 0; i < idx.size(); ++i) coeffs.push_back(tpolys[idx[i]]);
        out.emplace_back(tzero, 'v', std::move(coeffs));
        size_t k = 0;
        for (; k < idx.size(); ++k) {
            if (++idx[k] < tpolys.size()) break;
            idx[k] = 0;
        }
        if (k == idx.size()) break;
    }
    return out;
}
} // namespace detail

// Enumerates pairs (X(t,v), Y(t,v)) of bounded bidegree satisfying the curve
// equation identically. The equation splits as A(X) = B(Y) with both sides
// additive, so the pair space is searched by matching the two images.
inline ConstancyReport constancy_search(const CurveSpec& spec, int dt, int dv,
                                        uint64_t budget = search_budget()) {
    auto cands = detail::bivariate_candidates(spec.k0, dt, dv);
    uint64_t pairs = static_cast<uint64_t>(cands.size()) * cands.size();
    if (pairs > budget)
        throw budget_error("constancy_search: " + std::to_string(pairs) +
                           " candidate pairs exceed budget " + std::to_string(budget));
    auto vctx = ctx_lift_poly(ctx_poly(spec.k0), 'v');
    ConstancyReport rep;
    rep.dt = dt;
    rep.dv = dv;
    rep.pair_candidates = pairs;
    Poly<Poly<GF>> zero = cands[0].zero_like();
    // B(y) = rhs(0, y), keyed by canonical text
    std::map<std::string, std::vector<size_t>> by_image;
    for (size_t j = 0; j < cands.size(); ++j)
        by_image[to_text(curve_rhs(spec, zero, cands[j], vctx))].push_back(j);
    bool zero_found = false, nonconstant = false;
    for (size_t i = 0; i < cands.size(); ++i) {
        // A(x) = x - rhs(x, 0)
        auto key = to_text(cands[i] - curve_rhs(spec, cands[i], zero, vctx));
        auto it = by_image.find(key);
        if (it == by_image.end()) continue;
        for (size_t j : it->second) {
            if (!curve_contains(spec, cands[i], cands[j], vctx))
                throw verify_error("constancy_search: matched pair fails re-check");
            rep.maps.emplace_back(to_text(cands[i]), to_text(cands[j]));
            if (cands[i].is_zero() && cands[j].is_zero()) zero_found = true;
            if (cands[i].degree() > 0 || cands[j].degree() > 0) nonconstant = true;
        }
    }
    rep.only_zero_map = zero_found && rep.maps.size() == 1;
    rep.only_constant_maps = !nonconstant;
    return rep;
}

// control run into ambient A^1: no equation, every candidate is a map
inline ConstancyReport constancy_search_ambient(const FieldPtr& f, int dt, int dv) {
    auto cands = detail::bivariate_candidates(f, dt, dv);
    ConstancyReport rep;
    rep.dt = dt;
    rep.dv = dv;
    rep.ambient_mode = true;
    rep.pair_candidates = cands.size();
    for (const auto& c : cands) {
        if (c.degree() > 0) ++rep.nonconstant_count;
        if (rep.maps.size() < 5) rep.maps.emplace_back(to_text(c), "");
    }
    rep.only_constant_maps = rep.nonconstant_count == 0;
    return rep;
}

// ---- the u-homotopy and specialization ----

// phi'(v) := z(uv) over k(u); phi'(1) = z(u) and phi'(0) = z(0)
inline RationalMap<KU> homotopy_uv(const std::vector<KU>& z, std::optional<CurveSpec> target,
                                   const RingCtx<KU>& kuctx) {
    using V = RatFunc<KU>;
    KU uzero = kuctx.zero();
    KField kzero = uzero.num().base(); // zero of k, the coefficient field of k(u)
    KU u = KU::variable(kzero, uzero.num().var());
    V uv = V::constant(u, 'v') * V::variable(uzero, 'v');
    auto lift = [&](const KField& c) { return V::constant(KU::constant(c, u.num().var()), 'v'); };
    std::vector<V> coords;
    for (const auto& zc : z) {
        if (!zc.eval(kzero)) throw config_error("homotopy_uv: pole at u = 0");
        V num = zc.num().eval_in(uv, lift);
        V den = zc.den().eval_in(uv, lift);
        coords.push_back(num * den.inv());
    }
    auto f = make_rational_map(std::move(target), std::move(coords), kuctx);
    auto at1 = evaluate_map(f, kuctx.one());
    if (!at1 || *at1 != z) throw verify_error("homotopy_uv: phi'(1) != z");
    auto at0 = evaluate_map(f, kuctx.zero());
    std::vector<KU> z0;
    for (const auto& zc : z) z0.push_back(KU::constant(*zc.eval(kzero), u.num().var()));
    if (!at0 || *at0 != z0) throw verify_error("homotopy_uv: phi'(0) != z(0)");
    return f;
}

namespace detail {
inline KField specialize_elt(const KU& x, const KField& u0) {
    auto v = x.eval(u0);
    if (!v)
        throw config_error("specialize_u: u0 = " + to_text(u0) + " is a root of denominator " +
                           to_text(x.den()));
    return *v;
}

inline RatFunc<KField> specialize_coord(const RatFunc<KU>& c, const KField& u0) {
    auto spec_poly = [&](const Poly<KU>& f) {
        return f.map_coeffs([&](const KU& a) { return specialize_elt(a, u0); });
    };
    Poly<KField> den = spec_poly(c.den());
    if (den.is_zero())
        throw config_error("specialize_u: denominator " + to_text(c.den()) +
                           " vanishes at u0 = " + to_text(u0));
    return RatFunc<KField>(spec_poly(c.num())) * RatFunc<KField>(den).inv();
}
} // namespace detail

// substitute u = u0 through an entire chain witness
inline RChainWitness<KField> specialize_u(const RChainWitness<KU>& w, const KField& u0,
                                          const RingCtx<KField>& kctx) {
    RChainWitness<KField> out;
    for (const auto& pt : w.points) {
        std::vector<KField> q;
        for (const auto& c : pt) q.push_back(detail::specialize_elt(c, u0));
        out.points.push_back(std::move(q));
    }
    for (const auto& f : w.maps) {
        std::vector<RatFunc<KField>> coords;
        for (const auto& c : f.coords) coords.push_back(detail::specialize_coord(c, u0));
        out.maps.push_back(make_rational_map(f.target, std::move(coords), kctx));
    }
    return out;
}

// deterministic u0 selection: first element in the order 0, 1, ..., constants,
// then low-degree polynomials in t, avoiding every denominator zero
inline KField pick_u0(const RChainWitness<KU>& w, const RingCtx<KField>& kctx,
                      const FieldPtr& f, int max_degree = 2) {
    for (const auto& cand : polys_up_to_degree(f, max_degree)) {
        KField u0{cand};
        try {
            specialize_u(w, u0, kctx);
            return u0;
        } catch (const config_error&) {
            continue;
        }
    }
    throw config_error("pick_u0: no candidate avoids the bad locus");
}

// ---- u-adic points ----

struct LaurentResult {
    std::optional<CurvePoint<TruncSeries<KField>>> point_;
    int iterations = 0;
    std::vector<int> defect_valuations; // strictly increasing
    bool verified = false;              // equation holds mod u^N

    const CurvePoint<TruncSeries<KField>>& point() const { return *point_; }
};

// Fixed-point iteration x <- rhs(x, y0) in k[[u]]/u^N; the equation is already
// in contraction form for y0 of valuation >= 1, so the defect valuation
// strictly increases until it reaches the precision.
inline LaurentResult laurent_point(const CurveSpec& spec, const TruncSeries<KField>& y0_in,
                                   int N) {
    if (N < 1) throw config_error("laurent_point: precision must be >= 1");
    if (y0_in.precision() < N)
        throw config_error("laurent_point: y0 carries fewer than N coefficients");
    auto y0 = y0_in.truncate(N);
    auto val = y0.valuation();
    if (val && *val < 1) throw config_error("laurent_point: y0 must have valuation >= 1");
    auto ctx = ctx_series(spec.k0, N, y0.var());
    LaurentResult res;
    auto x = ctx.zero();
    int last = -1;
    for (;;) {
        auto defect = curve_residual(spec, x, y0, ctx);
        auto dval = defect.valuation();
        if (!dval) break; // zero mod u^N
        if (*dval <= last)
            throw verify_error("laurent_point: defect valuation failed to increase");
        last = *dval;
        res.defect_valuations.push_back(*dval);
        x = curve_rhs(spec, x, y0, ctx);
        ++res.iterations;
        if (res.iterations > N + 1)
            throw verify_error("laurent_point: iteration failed to terminate");
    }
    res.point_ = CurvePoint<TruncSeries<KField>>{spec, x, y0};
    res.verified = curve_contains(spec, x, y0, ctx);
    return res;
}

// ---- parsing of chain-witness element syntax ----

// an element of k(u): variables u, t and the constant-field generator z
inline KU parse_ku(const FieldPtr& f, const std::string& src) {
    GF z0 = GF::zero(f);
    KField tz = KField::variable(z0, 't');
    std::map<std::string, KU> env{{"u", KU::variable(tz.zero_like(), 'u')},
                                  {"t", KU::constant(tz, 'u')},
                                  {"z", KU::constant(KField::constant(GF::gen(f), 't'), 'u')}};
    return parse_expr(src, std::move(env), KU::constant(tz.one_like(), 'u'));
}

// an element of k(u)(v): variables v, u, t, z
inline RatFunc<KU> parse_kuv(const FieldPtr& f, const std::string& src) {
    using V = RatFunc<KU>;
    KU uzero = parse_ku(f, "0");
    std::map<std::string, V> env{{"v", V::variable(uzero, 'v')},
                                 {"u", V::constant(parse_ku(f, "u"), 'v')},
                                 {"t", V::constant(parse_ku(f, "t"), 'v')},
                                 {"z", V::constant(parse_ku(f, "z"), 'v')}};
    return parse_expr(src, std::move(env), V::constant(uzero.one_like(), 'v'));
}

} // namespace wound

#endif
