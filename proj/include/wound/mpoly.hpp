#ifndef WOUND_MPOLY_HPP
#define WOUND_MPOLY_HPP

// Sparse multivariate polynomials in a fixed number of free indeterminates,
// used for exact identity testing (bi-additivity, cocycle, symmetry, descent).
// The normal form is the term map itself: an identity holds iff the
// difference has no terms.

#include <map>
#include <utility>
#include <vector>

#include "wound/errors.hpp"
#include "wound/ring.hpp"

namespace wound {

template <class K>
class MPoly {
public:
    using Exp = std::vector<int>;

    MPoly(K base, int nvars) : base_(std::move(base)), n_(nvars) {}

    static MPoly zero(const K& base, int nvars) { return MPoly(base, nvars); }
    static MPoly constant(const K& v, int nvars) {
        MPoly r(v.zero_like(), nvars);
        if (!v.is_zero()) r.t_[Exp(static_cast<size_t>(nvars), 0)] = v;
        return r;
    }
    static MPoly variable(const K& base, int nvars, int i) {
        MPoly r(base, nvars);
        Exp e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        r.t_[std::move(e)] = base.one_like();
        return r;
    }

    int nvars() const { return n_; }
    const K& base() const { return base_; }
    const std::map<Exp, K>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int characteristic() const { return base_.characteristic(); }

    MPoly zero_like() const { return MPoly(base_, n_); }
    MPoly one_like() const { return constant(base_.one_like(), n_); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r(a.base_, a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exp e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const K& s, const MPoly& a) {
        MPoly r(a.base_, a.n_);
        for (const auto& [e, c] : a.t_) r.add_term(e, s * c);
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // substitute images[i] for variable i
    MPoly compose(const std::vector<MPoly>& images) const {
        if (static_cast<int>(images.size()) != n_)
            throw config_error("MPoly: compose arity mismatch");
        int m = images.empty() ? n_ : images[0].nvars();
        MPoly r(base_, m);
        for (const auto& [e, c] : t_) {
            MPoly term = MPoly::constant(c, m);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) term = term * ring_pow(images[i], static_cast<uint64_t>(e[i]));
            r = r + term;
        }
        return r;
    }

    // evaluate at concrete ring elements through a coefficient embedding
    template <class R, class Lift>
    R eval_in(const std::vector<R>& args, Lift&& lift) const {
        if (static_cast<int>(args.size()) != n_)
            throw config_error("MPoly: eval arity mismatch");
        R r = args[0].zero_like();
        for (const auto& [e, c] : t_) {
            R term = lift(c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) term = term * ring_pow(args[i], static_cast<uint64_t>(e[i]));
            r = r + term;
        }
        return r;
    }

    template <class F>
    MPoly map_coeffs(F&& f) const {
        MPoly r(f(base_), n_);
        for (const auto& [e, c] : t_) r.add_term(e, f(c));
        return r;
    }

private:
    void add_term(const Exp& e, const K& c) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (!c.is_zero()) t_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    void check(const MPoly& b) const {
        if (n_ != b.n_) throw config_error("MPoly: arity mismatch");
    }

    K base_;
    int n_;
    std::map<Exp, K> t_;
};

} // namespace wound

#endif
