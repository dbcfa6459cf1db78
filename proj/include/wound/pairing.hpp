#ifndef WOUND_PAIRING_HPP
#define WOUND_PAIRING_HPP

// Bi-additive pairings h : G_2 x G_2 -> G_1 and the central extension
// G = G_1 x G_2 with multiplication twisted by h. Identities that need no
// curve relations (bi-additivity, cocycle, symmetry) are checked as exact
// multivariate polynomial identities; containment and the group laws are
// checked by seeded sampling over etale algebras.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wound/curves.hpp"
#include "wound/errors.hpp"
#include "wound/mpoly.hpp"

namespace wound {

enum class PairingKind { endo, gabber, twisted };

inline std::string pairing_kind_name(PairingKind k) {
    switch (k) {
        case PairingKind::endo: return "endo";
        case PairingKind::gabber: return "gabber";
        case PairingKind::twisted: return "twisted";
    }
    return "?";
}

struct BiadditivePairing {
    PairingKind kind;
    int p, m, n;
    FieldPtr field;           // k_0, or F_4 for the twisted pairing
    std::optional<GF> zeta;   // primitive cube root of 1, twisted only
    CurveSpec source;         // a G_2 variant
    CurveSpec target;         // a G_1 variant
};

inline BiadditivePairing make_pairing(PairingKind kind, int p, int m, int n, FieldPtr k0,
                                      std::optional<GF> zeta = std::nullopt) {
    if (kind == PairingKind::twisted) {
        if (p != 2) throw config_error("make_pairing: twisted pairing requires p = 2");
        if (m % 2 == 0) throw config_error("make_pairing: twisted pairing requires m odd");
        if (!zeta) throw config_error("make_pairing: twisted pairing requires zeta");
        if (zeta->field()->p != 2 || zeta->field()->degree() != 2 || zeta->in_prime_field())
            throw config_error("make_pairing: zeta must lie in F_4 \\ F_2");
        // zeta^2 = zeta + 1 pins the primitive cube root
        if (*zeta * *zeta != *zeta + GF::one(zeta->field()))
            throw config_error("make_pairing: zeta is not a primitive cube root of 1");
        k0 = zeta->field();
    }
    GF one = GF::one(k0);
    switch (kind) {
        case PairingKind::endo:
        case PairingKind::twisted: {
            if (m > n) throw config_error("make_pairing: endo pairing requires 1 <= m <= n");
            CurveSpec source = make_spec(CurveVariant::endo2, p, k0, m, n, one, one);
            CurveSpec target = make_spec(CurveVariant::endo1, p, k0, m, m, one, one);
            return BiadditivePairing{kind, p, m, n, k0, zeta, source, target};
        }
        case PairingKind::gabber: {
            CurveSpec source = make_spec(CurveVariant::gabber2, p, k0, 1, 1, one, one);
            CurveSpec target = make_spec(CurveVariant::gabber1, p, k0, 1, 1, one, one);
            return BiadditivePairing{kind, p, 1, 1, k0, std::nullopt, source, target};
        }
    }
    throw config_error("make_pairing: bad kind");
}

// The F_4-action on the endo G_2 used by the twisted pairing:
// lambda . (x, y) = (lambda x, lambda^(2^n) y). The Frobenius weight on the
// second coordinate is what keeps the image inside G_2.
template <class R, class Lift>
std::pair<R, R> zeta_scale(const BiadditivePairing& h, const GF& lambda, const R& x,
                           const R& y, Lift&& lift) {
    return {lift(lambda) * x, lift(lambda.frobenius(h.n)) * y};
}

// exact evaluation of the two component polynomials on raw coordinate pairs
template <class R, class Lift>
std::pair<R, R> pairing_eval(const BiadditivePairing& h, const R& x, const R& y,
                             const R& xp, const R& yp, Lift&& lift) {
    switch (h.kind) {
        case PairingKind::endo:
            return {frobenius_power(x, h.m) * xp - x * frobenius_power(xp, h.m),
                    x * frobenius_power(yp, h.n - h.m) - frobenius_power(y, h.n - h.m) * xp};
        case PairingKind::gabber:
            return {x * frobenius_power(xp, 1) - frobenius_power(x, 1) * xp,
                    x * frobenius_power(yp, 1) - xp * frobenius_power(y, 1)};
        case PairingKind::twisted: {
            auto [zx, zy] = zeta_scale(h, *h.zeta, xp, yp, lift);
            return {frobenius_power(x, h.m) * zx - x * frobenius_power(zx, h.m),
                    x * frobenius_power(zy, h.n - h.m) - frobenius_power(y, h.n - h.m) * zx};
        }
    }
    throw config_error("pairing_eval: bad kind");
}

template <class R>
std::pair<R, R> pairing_eval(const BiadditivePairing& h, const CurvePoint<R>& P,
                             const CurvePoint<R>& Q, const RingCtx<R>& ctx) {
    if (P.spec != h.source || Q.spec != h.source)
        throw config_error("pairing_eval: points not on the source spec");
    return pairing_eval(h, P.x, P.y, Q.x, Q.y, ctx.lift);
}

// symbolic components of h in the 4 free indeterminates (x, y, x', y'),
// coefficients in the pairing's constant field
inline std::pair<MPoly<GF>, MPoly<GF>> pairing_symbolic(const BiadditivePairing& h,
                                                        int nvars = 4, int offset = 0) {
    using M = MPoly<GF>;
    GF z = GF::zero(h.field);
    auto lift = [&](const GF& c) { return M::constant(c, nvars); };
    M x = M::variable(z, nvars, offset), y = M::variable(z, nvars, offset + 1);
    M xp = M::variable(z, nvars, offset + 2), yp = M::variable(z, nvars, offset + 3);
    return pairing_eval(h, x, y, xp, yp, lift);
}

struct IdentityReport {
    bool pass = false;
    std::vector<std::string> residuals; // one per checked identity, "0" on pass
    std::string detail;
};

namespace detail {
// substitute three symbolic source points (6 variables) into a component
inline MPoly<GF> subst_pair(const MPoly<GF>& comp, const std::vector<MPoly<GF>>& first,
                            const std::vector<MPoly<GF>>& second) {
    std::vector<MPoly<GF>> images = {first[0], first[1], second[0], second[1]};
    return comp.compose(images);
}

inline std::vector<std::vector<MPoly<GF>>> free_points(const FieldPtr& f, int count) {
    GF z = GF::zero(f);
    int nv = 2 * count;
    std::vector<std::vector<MPoly<GF>>> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back({MPoly<GF>::variable(z, nv, 2 * i), MPoly<GF>::variable(z, nv, 2 * i + 1)});
    return pts;
}

inline std::vector<MPoly<GF>> pt_add(const std::vector<MPoly<GF>>& a,
                                     const std::vector<MPoly<GF>>& b) {
    return {a[0] + b[0], a[1] + b[1]};
}
} // namespace detail

// h(g+g', g'') = h(g, g'') + h(g', g'') and the mirror identity, as exact
// polynomial identities in 6 free coordinate indeterminates
inline IdentityReport check_biadditive(const BiadditivePairing& h) {
    auto [hx, hy] = pairing_symbolic(h);
    auto pts = detail::free_points(h.field, 3);
    IdentityReport rep;
    rep.pass = true;
    for (const auto& comp : {hx, hy}) {
        auto left = detail::subst_pair(comp, detail::pt_add(pts[0], pts[1]), pts[2]);
        auto right = detail::subst_pair(comp, pts[0], pts[2]) +
                     detail::subst_pair(comp, pts[1], pts[2]);
        auto res = left - right;
        rep.pass = rep.pass && res.is_zero();
        rep.residuals.push_back(to_text(res));
        auto left2 = detail::subst_pair(comp, pts[0], detail::pt_add(pts[1], pts[2]));
        auto right2 = detail::subst_pair(comp, pts[0], pts[1]) +
                      detail::subst_pair(comp, pts[0], pts[2]);
        auto res2 = left2 - right2;
        rep.pass = rep.pass && res2.is_zero();
        rep.residuals.push_back(to_text(res2));
    }
    return rep;
}

// h(g+g', g'') + h(g, g') = h(g, g'+g'') + h(g', g'')
inline IdentityReport check_cocycle(const BiadditivePairing& h) {
    auto [hx, hy] = pairing_symbolic(h);
    auto pts = detail::free_points(h.field, 3);
    IdentityReport rep;
    rep.pass = true;
    for (const auto& comp : {hx, hy}) {
        auto left = detail::subst_pair(comp, detail::pt_add(pts[0], pts[1]), pts[2]) +
                    detail::subst_pair(comp, pts[0], pts[1]);
        auto right = detail::subst_pair(comp, pts[0], detail::pt_add(pts[1], pts[2])) +
                     detail::subst_pair(comp, pts[1], pts[2]);
        auto res = left - right;
        rep.pass = rep.pass && res.is_zero();
        rep.residuals.push_back(to_text(res));
    }
    return rep;
}

struct SymmetryReport {
    bool symmetric = false;
    std::string difference_x, difference_y; // h(g,g') - h(g',g), symbolic
};

inline SymmetryReport check_symmetry(const BiadditivePairing& h) {
    auto [hx, hy] = pairing_symbolic(h);
    auto pts = detail::free_points(h.field, 2);
    SymmetryReport rep;
    auto dx = detail::subst_pair(hx, pts[0], pts[1]) - detail::subst_pair(hx, pts[1], pts[0]);
    auto dy = detail::subst_pair(hy, pts[0], pts[1]) - detail::subst_pair(hy, pts[1], pts[0]);
    rep.symmetric = dx.is_zero() && dy.is_zero();
    rep.difference_x = to_text(dx, {"x", "y", "xp", "yp"});
    rep.difference_y = to_text(dy, {"x", "y", "xp", "yp"});
    return rep;
}

// ---- sampling over etale algebras ----

using KField = RatFunc<GF>;
using EElt = EtaleElt<KField>;

struct SourceSampler {
    EtalePtr<KField> algebra;
    RingCtx<EElt> ctx;
    std::vector<CurvePoint<EElt>> generators; // tautological points, embedded
    CurveSpec spec;

    CurvePoint<EElt> zero() const { return curve_zero(spec, ctx); }

    // a seeded random F_p-combination of the generators (and zeta twists,
    // when the spec lives over F_4)
    CurvePoint<EElt> sample(std::mt19937_64& rng, const std::optional<GF>& zeta,
                            int action_weight) const {
        CurvePoint<EElt> acc = zero();
        int p = spec.p;
        for (const auto& g : generators) {
            int c = static_cast<int>(rng() % static_cast<uint64_t>(p));
            CurvePoint<EElt> term{spec, ring_scale(c, g.x), ring_scale(c, g.y)};
            if (zeta) {
                int j = static_cast<int>(rng() % 3);
                GF lam = zeta->pow(static_cast<uint64_t>(j));
                GF lamw = lam.frobenius(action_weight);
                term.x = ctx.lift(lam) * term.x;
                term.y = ctx.lift(lamw) * term.y;
            }
            acc = acc + term;
        }
        return acc;
    }
};

// Tensor of point adjunctions at the given y-values; the tautological points
// generate the sampled subgroup.
inline SourceSampler make_source_sampler(const CurveSpec& spec,
                                         const std::vector<KField>& y_values) {
    if (y_values.empty()) throw config_error("make_source_sampler: need y-values");
    std::vector<AdjoinResult<KField>> parts;
    for (const auto& y0 : y_values) parts.push_back(adjoin_point(spec, y0));
    EtalePtr<KField> A = parts[0].algebra;
    for (size_t i = 1; i < parts.size(); ++i) A = etale_tensor(A, parts[i].algebra);
    SourceSampler s{A, ctx_etale(A), {}, spec};
    // embed each tautological point into the full tensor
    int left_dim = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto& pt = parts[i].point();
        std::vector<KField> cx(static_cast<size_t>(A->dim()), A->base().zero_like());
        std::vector<KField> cy = cx;
        int d = parts[i].algebra->dim();
        // generator of factor i sits at stride left_dim
        for (int j = 0; j < d; ++j) {
            cx[static_cast<size_t>(j) * left_dim] = pt.x.coeffs()[j];
            cy[static_cast<size_t>(j) * left_dim] = pt.y.coeffs()[j];
        }
        s.generators.push_back(CurvePoint<EElt>{spec, EElt(A, std::move(cx)), EElt(A, std::move(cy))});
        left_dim *= d;
    }
    return s;
}

// default y-values t, t+1, t+2, ... in the spec's function field
inline std::vector<KField> default_y_values(const CurveSpec& spec, int count) {
    std::vector<KField> ys;
    KField t = KField::variable(GF::zero(spec.k0), 't');
    for (int i = 0; i < count; ++i)
        ys.push_back(t + KField::constant(GF::of_int(spec.k0, i), 't'));
    return ys;
}

struct ContainmentReport {
    int trials = 0;
    int failures = 0;
    uint64_t seed = 0;
    bool pass() const { return failures == 0; }
    std::string first_failure;
};

// samples pairs of source points and asserts h lands on the target curve
inline ContainmentReport check_containment(const BiadditivePairing& h, int trials,
                                           uint64_t seed,
                                           std::optional<CurveSpec> target_override = std::nullopt) {
    auto sampler = make_source_sampler(h.source, default_y_values(h.source, 2));
    CurveSpec target = target_override.value_or(h.target);
    std::mt19937_64 rng(seed);
    ContainmentReport rep;
    rep.seed = seed;
    rep.trials = trials;
    std::optional<GF> zeta = h.kind == PairingKind::twisted ? h.zeta : std::nullopt;
    for (int i = 0; i < trials; ++i) {
        auto P = sampler.sample(rng, zeta, h.n);
        auto Q = sampler.sample(rng, zeta, h.n);
        auto [vx, vy] = pairing_eval(h, P, Q, sampler.ctx);
        if (!curve_contains(target, vx, vy, sampler.ctx)) {
            ++rep.failures;
            if (rep.first_failure.empty())
                rep.first_failure = "trial " + std::to_string(i) + ": (" + to_text(vx) + ", " +
                                    to_text(vy) + ")";
        }
    }
    return rep;
}

// ---- the central extension ----

template <class R>
struct ExtElt {
    CurvePoint<R> g1; // on the target spec, central
    CurvePoint<R> g2; // on the source spec
    bool is_identity() const { return g1.is_zero() && g2.is_zero(); }
    friend bool operator==(const ExtElt& a, const ExtElt& b) {
        return a.g1 == b.g1 && a.g2 == b.g2;
    }
    friend bool operator!=(const ExtElt& a, const ExtElt& b) { return !(a == b); }
};

template <class R>
struct ExtGroup {
    BiadditivePairing h;
    RingCtx<R> ctx;

    ExtElt<R> identity() const {
        return ExtElt<R>{curve_zero(h.target, ctx), curve_zero(h.source, ctx)};
    }
    ExtElt<R> elt(CurvePoint<R> g1, CurvePoint<R> g2) const {
        return ExtElt<R>{std::move(g1), std::move(g2)};
    }
    // (g1, g2).(g1', g2') = (g1 + g1' + h(g2, g2'), g2 + g2')
    ExtElt<R> mul(const ExtElt<R>& a, const ExtElt<R>& b) const {
        auto [hx, hy] = pairing_eval(h, a.g2, b.g2, ctx);
        CurvePoint<R> g1{h.target, a.g1.x + b.g1.x + hx, a.g1.y + b.g1.y + hy};
        return ExtElt<R>{g1, a.g2 + b.g2};
    }
    // (g1, g2)^-1 = (-g1 - h(g2, -g2), -g2)
    ExtElt<R> inv(const ExtElt<R>& a) const {
        auto [hx, hy] = pairing_eval(h, a.g2, -a.g2, ctx);
        CurvePoint<R> g1{h.target, -a.g1.x - hx, -a.g1.y - hy};
        return ExtElt<R>{g1, -a.g2};
    }
    ExtElt<R> commutator(const ExtElt<R>& a, const ExtElt<R>& b) const {
        return mul(mul(a, b), mul(inv(a), inv(b)));
    }
    // the closed form the commutator must equal: (h(g2,g2') - h(g2',g2), 0)
    ExtElt<R> commutator_formula(const ExtElt<R>& a, const ExtElt<R>& b) const {
        auto [x1, y1] = pairing_eval(h, a.g2, b.g2, ctx);
        auto [x2, y2] = pairing_eval(h, b.g2, a.g2, ctx);
        CurvePoint<R> g1{h.target, x1 - x2, y1 - y2};
        return ExtElt<R>{g1, curve_zero(h.source, ctx)};
    }
};

struct WitnessResult {
    bool found = false;
    EtalePtr<KField> algebra;
    std::vector<KField> y_values;
    std::string g_text, gp_text, commutator_text;
    // stored concretely for further checks
    std::optional<ExtElt<EElt>> g, gp, comm;
};

// Adjoins source points at distinct y-values, lifts with g1 = 0 and returns a
// non-identity commutator (centrality makes the choice of lift irrelevant).
inline WitnessResult noncommutativity_witness(const BiadditivePairing& h,
                                              std::vector<KField> y_values = {}) {
    auto sym = check_symmetry(h);
    if (sym.symmetric)
        throw verify_error("noncommutativity_witness: pairing is symmetric, no witness exists");
    if (y_values.empty()) y_values = default_y_values(h.source, 2);
    WitnessResult res;
    for (size_t i = 0; i + 1 < y_values.size(); ++i) {
        std::vector<KField> pair_vals = {y_values[i], y_values[i + 1]};
        auto sampler = make_source_sampler(h.source, pair_vals);
        ExtGroup<EElt> G{h, sampler.ctx};
        auto g = G.elt(curve_zero(h.target, sampler.ctx), sampler.generators[0]);
        auto gp = G.elt(curve_zero(h.target, sampler.ctx), sampler.generators[1]);
        auto comm = G.commutator(g, gp);
        if (!comm.is_identity()) {
            if (comm != G.commutator_formula(g, gp))
                throw verify_error("noncommutativity_witness: commutator formula mismatch");
            res.found = true;
            res.algebra = sampler.algebra;
            res.y_values = pair_vals;
            res.g = g;
            res.gp = gp;
            res.comm = comm;
            res.g_text = "((" + to_text(g.g1.x) + ", " + to_text(g.g1.y) + "), (" +
                         to_text(g.g2.x) + ", " + to_text(g.g2.y) + "))";
            res.gp_text = "((" + to_text(gp.g1.x) + ", " + to_text(gp.g1.y) + "), (" +
                          to_text(gp.g2.x) + ", " + to_text(gp.g2.y) + "))";
            res.commutator_text = "((" + to_text(comm.g1.x) + ", " + to_text(comm.g1.y) +
                                  "), (" + to_text(comm.g2.x) + ", " + to_text(comm.g2.y) + "))";
            return res;
        }
    }
    throw verify_error("noncommutativity_witness: exhausted candidate y-values");
}

} // namespace wound

#endif
