#ifndef WOUND_CURVES_HPP
#define WOUND_CURVES_HPP

// One-dimensional wound unipotent subgroups of G_a^2 cut out by p-polynomial
// equations with coefficients in k_0 and t. Membership, subgroup arithmetic,
// bounded-degree rational point search, the differential-identity certificate
// and separable point adjunction.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wound/errors.hpp"
#include "wound/etale.hpp"
#include "wound/format.hpp"
#include "wound/gf.hpp"
#include "wound/poly.hpp"
#include "wound/ratfunc.hpp"
#include "wound/ring.hpp"
#include "wound/series.hpp"

namespace wound {

enum class CurveVariant { rosenlicht, endo1, endo2, gabber1, gabber2, gabberV };

inline std::string variant_name(CurveVariant v) {
    switch (v) {
        case CurveVariant::rosenlicht: return "rosenlicht";
        case CurveVariant::endo1: return "endo1";
        case CurveVariant::endo2: return "endo2";
        case CurveVariant::gabber1: return "gabber1";
        case CurveVariant::gabber2: return "gabber2";
        case CurveVariant::gabberV: return "gabberV";
    }
    return "?";
}

inline CurveVariant variant_from_name(const std::string& s) {
    if (s == "rosenlicht") return CurveVariant::rosenlicht;
    if (s == "endo1") return CurveVariant::endo1;
    if (s == "endo2") return CurveVariant::endo2;
    if (s == "gabber1") return CurveVariant::gabber1;
    if (s == "gabber2") return CurveVariant::gabber2;
    if (s == "gabberV") return CurveVariant::gabberV;
    throw config_error("unknown curve variant '" + s + "'");
}

struct CurveSpec {
    CurveVariant variant;
    int p;
    FieldPtr k0;
    int m, n;
    GF a, b;

    friend bool operator==(const CurveSpec& s, const CurveSpec& o) {
        return s.variant == o.variant && s.p == o.p && s.m == o.m && s.n == o.n &&
               s.a == o.a && s.b == o.b && s.k0->same_as(*o.k0);
    }
    friend bool operator!=(const CurveSpec& s, const CurveSpec& o) { return !(s == o); }
};

inline bool pm_exceeds_two(int p, int m) { return p >= 3 || m >= 2; }

inline CurveSpec make_spec(CurveVariant variant, int p, FieldPtr k0, int m, int n,
                           GF a, GF b) {
    if (!is_prime(p)) throw config_error("make_spec: p must be prime");
    if (k0->p != p) throw config_error("make_spec: base field characteristic mismatch");
    if (m < 1 || n < 1) throw config_error("make_spec: m, n must be >= 1");
    if (a.is_zero() || b.is_zero()) throw config_error("make_spec: a, b must be units");
    switch (variant) {
        case CurveVariant::rosenlicht:
        case CurveVariant::gabberV:
            if (!pm_exceeds_two(p, m))
                throw config_error("make_spec: variant requires p^m > 2");
            break;
        case CurveVariant::endo1:
        case CurveVariant::endo2:
            if (m > n) throw config_error("make_spec: endo variants require 1 <= m <= n");
            break;
        case CurveVariant::gabber1:
        case CurveVariant::gabber2:
            break;
    }
    return CurveSpec{variant, p, std::move(k0), m, n, std::move(a), std::move(b)};
}

// How a curve equation reads its coefficients inside an ambient ring R:
// the distinguished element t and the embedding of k_0-scalars.
template <class R>
struct RingCtx {
    R t;
    std::function<R(const GF&)> lift;
    R zero() const { return t.zero_like(); }
    R one() const { return t.one_like(); }
};

// right-hand side of the defining equation X = ...
template <class R>
R curve_rhs(const CurveSpec& s, const R& x, const R& y, const RingCtx<R>& ctx) {
    switch (s.variant) {
        case CurveVariant::rosenlicht:
            return ctx.lift(s.a) * ctx.t * frobenius_power(x, s.m) +
                   ctx.lift(s.b) * frobenius_power(y, s.n);
        case CurveVariant::endo1:
            return ctx.t * frobenius_power(x, s.m) + frobenius_power(y, s.m);
        case CurveVariant::endo2:
            return -(ctx.t * frobenius_power(x, 2 * s.m)) + frobenius_power(y, s.n);
        case CurveVariant::gabber1:
            return -frobenius_power(x, 1) - ctx.t * frobenius_power(y, 1);
        case CurveVariant::gabber2:
            return frobenius_power(x, 2) + ctx.t * frobenius_power(y, 2);
        case CurveVariant::gabberV:
            return ctx.lift(s.a) * frobenius_power(x, s.m) +
                   ctx.lift(s.b) * ctx.t * frobenius_power(y, s.n);
    }
    throw config_error("curve_rhs: bad variant");
}

template <class R>
R curve_residual(const CurveSpec& s, const R& x, const R& y, const RingCtx<R>& ctx) {
    return x - curve_rhs(s, x, y, ctx);
}

template <class R>
bool curve_contains(const CurveSpec& s, const R& x, const R& y, const RingCtx<R>& ctx) {
    return curve_residual(s, x, y, ctx).is_zero();
}

template <class R>
struct CurvePoint {
    CurveSpec spec;
    R x, y;

    friend CurvePoint operator+(const CurvePoint& P, const CurvePoint& Q) {
        if (P.spec != Q.spec) throw config_error("CurvePoint: spec mismatch");
        return CurvePoint{P.spec, P.x + Q.x, P.y + Q.y};
    }
    CurvePoint operator-() const { return CurvePoint{spec, -x, -y}; }
    friend CurvePoint operator-(const CurvePoint& P, const CurvePoint& Q) { return P + (-Q); }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    friend bool operator==(const CurvePoint& P, const CurvePoint& Q) {
        return P.spec == Q.spec && P.x == Q.x && P.y == Q.y;
    }
};

template <class R>
CurvePoint<R> curve_zero(const CurveSpec& s, const RingCtx<R>& ctx) {
    return CurvePoint<R>{s, ctx.zero(), ctx.zero()};
}

// ---- contexts for the standard ambients ----

// k_0[t] with coefficients embedded into `amb` (amb = k_0 or an extension)
inline RingCtx<Poly<GF>> ctx_poly(const FieldPtr& amb) {
    GF z = GF::zero(amb);
    return RingCtx<Poly<GF>>{Poly<GF>::variable(z, 't'),
                             [amb](const GF& c) {
                                 return Poly<GF>::constant(embed_gf(c, amb), 't');
                             }};
}

// k = F_q(t)
inline RingCtx<RatFunc<GF>> ctx_ratfunc(const FieldPtr& amb) {
    GF z = GF::zero(amb);
    return RingCtx<RatFunc<GF>>{RatFunc<GF>::variable(z, 't'),
                                [amb](const GF& c) {
                                    return RatFunc<GF>::constant(embed_gf(c, amb), 't');
                                }};
}

// étale algebra over k
inline RingCtx<EtaleElt<RatFunc<GF>>> ctx_etale(const EtalePtr<RatFunc<GF>>& A) {
    using K = RatFunc<GF>;
    using E = EtaleElt<K>;
    FieldPtr amb = A->base().num().base().field();
    K t = K::variable(GF::zero(amb), A->base().var());
    return RingCtx<E>{E::scalar(A, t), [A, amb](const GF& c) {
                          return E::scalar(A, K::constant(embed_gf(c, amb),
                                                          A->base().var()));
                      }};
}

// truncated Laurent-series ambient k[[u]]/u^N
inline RingCtx<TruncSeries<RatFunc<GF>>> ctx_series(const FieldPtr& amb, int prec,
                                                    char uvar = 'u', char tvar = 't') {
    using K = RatFunc<GF>;
    using S = TruncSeries<K>;
    K kzero = K::zero(GF::zero(amb), tvar);
    K t = K::variable(GF::zero(amb), tvar);
    return RingCtx<S>{S::constant(t, uvar, prec), [amb, prec, uvar, tvar](const GF& c) {
                          return S::constant(K::constant(embed_gf(c, amb), tvar), uvar, prec);
                      }};
}

// fraction field K(v) on top of an existing context for K
template <class K>
RingCtx<RatFunc<K>> ctx_lift_ratfunc(const RingCtx<K>& inner, char var) {
    auto lift = inner.lift;
    return RingCtx<RatFunc<K>>{RatFunc<K>::constant(inner.t, var),
                               [lift, var](const GF& c) {
                                   return RatFunc<K>::constant(lift(c), var);
                               }};
}

// polynomial ring K[v] on top of an existing context for K
template <class K>
RingCtx<Poly<K>> ctx_lift_poly(const RingCtx<K>& inner, char var) {
    auto lift = inner.lift;
    return RingCtx<Poly<K>>{Poly<K>::constant(inner.t, var),
                            [lift, var](const GF& c) {
                                return Poly<K>::constant(lift(c), var);
                            }};
}

// ---- bounded-degree point search ----

inline uint64_t search_budget(uint64_t fallback = 100000000ull) {
    if (const char* env = std::getenv("WOUNDLAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

// all polynomials of degree <= D over the base field, ordered by
// (degree, coefficient tuple); the zero polynomial comes first
inline std::vector<Poly<GF>> polys_up_to_degree(const FieldPtr& f, int D, char var = 't') {
    std::vector<GF> elems = field_elements(f);
    GF z = GF::zero(f);
    std::vector<Poly<GF>> out;
    out.push_back(Poly<GF>::zero(z, var));
    for (int d = 0; d <= D; ++d) {
        std::vector<size_t> idx(static_cast<size_t>(d) + 1, 0);
        idx[static_cast<size_t>(d)] = 1; // leading coefficient non-zero
        for (;;) {
            std::vector<GF> coeffs;
            for (size_t i = 0; i <= static_cast<size_t>(d); ++i) coeffs.push_back(elems[idx[i]]);
            out.emplace_back(z, var, std::move(coeffs));
            // increment: low coefficients first, leading stays non-zero
            int k = 0;
            for (; k <= d; ++k) {
                ++idx[static_cast<size_t>(k)];
                size_t limit = elems.size();
                if (idx[static_cast<size_t>(k)] < limit) break;
                idx[static_cast<size_t>(k)] = (k == d) ? 1 : 0;
                if (k == d) { k = d + 1; break; }
            }
            if (k > d) break;
        }
    }
    return out;
}

struct SearchResult {
    std::vector<std::pair<Poly<GF>, Poly<GF>>> points; // (x, y), search order
    uint64_t candidates_checked = 0;
};

// Exhaustive search over pairs (x, y) of polynomials in t of degree <= D
// with coefficients in k_0. Order: (deg y, coeffs of y, deg x, coeffs of x).
inline SearchResult polynomial_point_search(const CurveSpec& s, int D,
                                            uint64_t budget = search_budget()) {
    auto cands = polys_up_to_degree(s.k0, D);
    uint64_t total = static_cast<uint64_t>(cands.size()) * cands.size();
    if (total > budget)
        throw budget_error("polynomial_point_search: " + std::to_string(total) +
                           " candidate pairs exceed budget " + std::to_string(budget));
    auto ctx = ctx_poly(s.k0);
    SearchResult res;
    for (const auto& y : cands)
        for (const auto& x : cands) {
            ++res.candidates_checked;
            if (curve_contains(s, x, y, ctx)) res.points.emplace_back(x, y);
        }
    return res;
}

// ---- the derivation certificate ----

struct OdeCertificate {
    std::string identity;                 // which differential identity was checked
    bool holds = false;
    std::optional<RatFunc<GF>> residual;  // zero iff holds
    bool x_is_polynomial = false;
    int poly_degree = -1;                 // degree of x when polynomial
    std::string degree_argument;          // the contradiction for non-constant solutions
};

// Checks the differential identity obtained by deriving the curve equation
// in t (the Y-term drops out since d(f^p)/dt = 0). For candidates that pass
// with polynomial x of degree d >= 1, reports the impossible degree equation.
inline OdeCertificate ode_certificate(const CurveSpec& s, const RatFunc<GF>& x) {
    auto ctx = ctx_ratfunc(s.k0);
    RatFunc<GF> dx = x.derivative();
    RatFunc<GF> residual = dx.zero_like();
    std::string identity;
    int expo = 0;
    bool t_weighted = false;
    switch (s.variant) {
        case CurveVariant::rosenlicht:
            expo = s.m;
            identity = "dx/dt = a*x^(p^m)";
            residual = dx - ctx.lift(s.a) * frobenius_power(x, s.m);
            break;
        case CurveVariant::endo1:
            expo = s.m;
            identity = "dx/dt = x^(p^m)";
            residual = dx - frobenius_power(x, s.m);
            break;
        case CurveVariant::endo2:
            expo = 2 * s.m;
            identity = "dx/dt = -x^(p^(2m))";
            residual = dx + frobenius_power(x, 2 * s.m);
            break;
        case CurveVariant::gabber1:
            expo = 1;
            t_weighted = true;
            identity = "t*dx/dt = x+x^p";
            residual = ctx.t * dx - (x + frobenius_power(x, 1));
            break;
        case CurveVariant::gabber2:
            expo = 2;
            t_weighted = true;
            identity = "t*dx/dt = x-x^(p^2)";
            residual = ctx.t * dx - (x - frobenius_power(x, 2));
            break;
        case CurveVariant::gabberV:
            expo = s.m;
            t_weighted = true;
            identity = "t*dx/dt = x-a*x^(p^m)";
            residual = ctx.t * dx - (x - ctx.lift(s.a) * frobenius_power(x, s.m));
            break;
    }
    OdeCertificate cert;
    cert.identity = identity;
    cert.holds = residual.is_zero();
    cert.residual = residual;
    cert.x_is_polynomial = x.is_poly();
    if (cert.x_is_polynomial) cert.poly_degree = x.num().degree();
    if (cert.holds && cert.x_is_polynomial && cert.poly_degree >= 1) {
        long long pm = 1;
        for (int i = 0; i < expo; ++i) pm *= s.p;
        long long d = cert.poly_degree;
        if (t_weighted)
            cert.degree_argument = "degree comparison forces d = p^m*d: " + std::to_string(d) +
                                   " = " + std::to_string(pm * d) + ", impossible for d >= 1";
        else
            cert.degree_argument = "degree comparison forces d-1 = p^m*d: " +
                                   std::to_string(d - 1) + " = " + std::to_string(pm * d) +
                                   ", impossible for d >= 1";
    }
    return cert;
}

// ---- separable point adjunction ----

template <class K>
struct AdjoinResult {
    EtalePtr<K> algebra;
    std::optional<CurvePoint<EtaleElt<K>>> point_; // the tautological point (X-bar, y0)
    std::optional<Poly<K>> modulus_;               // monic defining polynomial in X
    bool reducible = false;                        // a root was found within the search bound
    std::optional<K> root;                         // such a root, when found
    bool irreducibility_certified = false;
    int root_search_degree = 0;

    const CurvePoint<EtaleElt<K>>& point() const { return *point_; }
    const Poly<K>& modulus() const { return *modulus_; }
};

// Substitutes Y = y0 into the defining equation, monicizes the resulting
// separable polynomial in X and returns K[X]/(modulus) with its tautological
// point. Reducibility over K is probed by root search over k_0[t]-candidates
// of degree <= root_degree (non-constant denominators are excluded by the
// ode_certificate degree argument).
inline AdjoinResult<RatFunc<GF>> adjoin_point(const CurveSpec& s, const RatFunc<GF>& y0,
                                              int root_degree = 3) {
    using K = RatFunc<GF>;
    using PX = Poly<K>;
    auto kctx = ctx_ratfunc(s.k0);
    auto pctx = ctx_lift_poly(kctx, 'x');
    PX X = PX::variable(kctx.zero(), 'x');
    PX y0c = PX::constant(y0, 'x');
    PX eq = X - curve_rhs(s, X, y0c, pctx);
    if (eq.degree() < 1) throw config_error("adjoin_point: degenerate substituted equation");
    PX modulus = poly_monic(eq);
    PX der = modulus.derivative();
    if (der.is_zero() || poly_gcd(modulus, der).degree() != 0)
        throw config_error("adjoin_point: substituted equation is inseparable");

    AdjoinResult<K> res;
    res.modulus_ = modulus;
    res.algebra = EtaleAlgebra<K>::make({modulus});
    auto ectx = ctx_etale(res.algebra);
    auto xbar = EtaleElt<K>::generator(res.algebra, 0);
    auto y0e = EtaleElt<K>::scalar(res.algebra, y0);
    res.point_ = CurvePoint<EtaleElt<K>>{s, xbar, y0e};
    if (!curve_contains(s, res.point().x, res.point().y, ectx))
        throw verify_error("adjoin_point: tautological point fails containment");

    res.root_search_degree = root_degree;
    for (const auto& cand : polys_up_to_degree(s.k0, root_degree)) {
        K r(cand);
        if (modulus.eval(r).is_zero()) {
            res.reducible = true;
            res.root = r;
            break;
        }
    }
    res.irreducibility_certified = !res.reducible && modulus.degree() <= 3;
    return res;
}

} // namespace wound

#endif
