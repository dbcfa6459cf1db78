#ifndef WOUND_RATFUNC_HPP
#define WOUND_RATFUNC_HPP

// Reduced fractions of univariate polynomials, denominator monic. Equality is
// structural, which is why the canonical form matters.

#include <optional>
#include <utility>

#include "wound/errors.hpp"
#include "wound/poly.hpp"

namespace wound {

template <class K>
class RatFunc {
public:
    explicit RatFunc(Poly<K> num)
        : num_(std::move(num)), den_(num_.one_like()) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc zero(const K& base, char var) { return RatFunc(Poly<K>::zero(base, var)); }
    static RatFunc one(const K& base, char var) {
        return RatFunc(Poly<K>::constant(base.one_like(), var));
    }
    static RatFunc variable(const K& base, char var) {
        return RatFunc(Poly<K>::variable(base, var));
    }
    static RatFunc constant(const K& value, char var) {
        return RatFunc(Poly<K>::constant(value, var));
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    char var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }
    int characteristic() const { return num_.characteristic(); }

    RatFunc zero_like() const { return RatFunc(num_.zero_like()); }
    RatFunc one_like() const { return RatFunc(num_.one_like()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc inv() const {
        if (is_zero()) throw config_error("RatFunc: division by zero");
        return RatFunc(den_, num_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // formal derivative in the fraction's own variable (quotient rule)
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // substitution of the variable; nullopt when the denominator vanishes
    std::optional<K> eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) return std::nullopt;
        return num_.eval(x) / d;
    }

    template <class F>
    auto map_coeffs(F&& f) const {
        auto n = num_.map_coeffs(f);
        auto d = den_.map_coeffs(f);
        return RatFunc<typename std::decay_t<decltype(n.base())>>(n, d);
    }

private:
    void normalize() {
        if (den_.is_zero()) throw config_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = den_.one_like();
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divmod(num_, g).first;
            den_ = poly_divmod(den_, g).first;
        }
        K c = den_.lead().inv();
        num_ = c * num_;
        den_ = c * den_;
    }

    Poly<K> num_, den_;
};

} // namespace wound

#endif
