#ifndef WOUND_POLY_HPP
#define WOUND_POLY_HPP

// Dense univariate polynomials over an arbitrary exact coefficient field K.
// K may itself be a RatFunc field, so towers like F_q(t)[v] come for free.

#include <type_traits>
#include <utility>
#include <vector>

#include "wound/errors.hpp"

namespace wound {

template <class K>
class Poly {
public:
    // `base` is a zero element of K carrying the runtime field structure.
    Poly(K base, char var) : base_(std::move(base)), var_(var) {}
    Poly(K base, char var, std::vector<K> coeffs)
        : base_(std::move(base)), var_(var), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(const K& base, char var) { return Poly(base, var); }
    static Poly constant(const K& value, char var) {
        Poly r(value.zero_like(), var);
        if (!value.is_zero()) r.c_.push_back(value);
        return r;
    }
    static Poly variable(const K& base, char var) {
        return Poly(base, var, {base.zero_like(), base.one_like()});
    }

    char var() const { return var_; }
    const K& base() const { return base_; }
    const std::vector<K>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int characteristic() const { return base_.characteristic(); }

    const K& lead() const {
        if (c_.empty()) throw config_error("Poly: leading coefficient of zero");
        return c_.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return base_;
        return c_[i];
    }
    K constant_term() const { return coeff(0); }

    Poly zero_like() const { return Poly(base_, var_); }
    Poly one_like() const { return constant(base_.one_like(), var_); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.base_, a.var_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.base_);
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.base_, a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.base_);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // multiply by var^k
    Poly shifted(int k) const {
        if (is_zero()) return *this;
        Poly r(base_, var_);
        r.c_.assign(c_.size() + k, base_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    Poly derivative() const {
        Poly r(base_, var_);
        int p = characteristic();
        for (size_t i = 1; i < c_.size(); ++i) {
            K m = base_.zero_like();
            K one = base_.one_like();
            for (size_t j = 0; j < i % p; ++j) m = m + one;
            r.c_.push_back(m * c_[i]);
        }
        r.trim();
        return r;
    }

    K eval(const K& x) const {
        K r = base_;
        for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
        return r;
    }

    // Horner evaluation through a coefficient-embedding into a larger ring.
    template <class R, class Lift>
    R eval_in(const R& x, Lift&& lift) const {
        R r = x.zero_like();
        for (int i = degree(); i >= 0; --i) r = r * x + lift(c_[i]);
        return r;
    }

    // the mapped coefficients may live in a different ring
    template <class F>
    auto map_coeffs(F&& f) const {
        using K2 = std::decay_t<decltype(f(base_))>;
        std::vector<K2> c;
        for (const auto& x : c_) c.push_back(f(x));
        return Poly<K2>(f(base_), var_, std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check(const Poly& b) const {
        if (var_ != b.var_) throw config_error("Poly: variable mismatch");
    }

    K base_;
    char var_;
    std::vector<K> c_;
};

// f = q*g + r, deg r < deg g. Needs invertible leading coefficient of g.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(Poly<K> f, const Poly<K>& g) {
    if (g.is_zero()) throw config_error("poly_divmod: division by zero polynomial");
    Poly<K> q = f.zero_like();
    K lginv = g.lead().inv();
    while (!f.is_zero() && f.degree() >= g.degree()) {
        int shift = f.degree() - g.degree();
        K c = f.lead() * lginv;
        Poly<K> term = Poly<K>::constant(c, f.var()).shifted(shift);
        q = q + term;
        f = f - term * g;
    }
    return {q, f};
}

template <class K>
Poly<K> poly_rem(const Poly<K>& f, const Poly<K>& g) {
    return poly_divmod(f, g).second;
}

template <class K>
Poly<K> poly_monic(const Poly<K>& f) {
    if (f.is_zero()) return f;
    K c = f.lead().inv();
    return c * f;
}

// monic gcd
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

} // namespace wound

#endif
