#ifndef WOUND_GF_HPP
#define WOUND_GF_HPP

// Finite fields F_{p^r} with an explicit irreducible modulus over F_p.
// Elements are residues (little-endian coefficient lists) modulo the modulus.

#include <cassert>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wound/errors.hpp"

namespace wound {

namespace fpvec {

// Dense little-endian polynomials over F_p, coefficients in [0, p).

inline void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const std::vector<int>& a) { return static_cast<int>(a.size()) - 1; }

inline std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

inline std::vector<int> sub(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
    trim(r);
    return r;
}

inline std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

inline int inv_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw config_error("fpvec: inverse of zero in F_p");
    // p is small throughout; a linear scan is fine
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw config_error("fpvec: modulus not prime");
}

// f = q*g + r with deg r < deg g; g non-zero.
inline std::pair<std::vector<int>, std::vector<int>> divmod(std::vector<int> f,
                                                            const std::vector<int>& g, int p) {
    if (g.empty()) throw config_error("fpvec: division by zero polynomial");
    std::vector<int> q;
    int lg = g.back();
    int lginv = inv_mod(lg, p);
    if (deg(f) >= deg(g)) q.assign(f.size() - g.size() + 1, 0);
    while (deg(f) >= deg(g)) {
        int shift = deg(f) - deg(g);
        int c = (f.back() * lginv) % p;
        q[shift] = c;
        for (size_t i = 0; i < g.size(); ++i) {
            size_t k = i + shift;
            f[k] = (f[k] - c * g[i] % p + p) % p;
        }
        trim(f);
    }
    trim(q);
    return {q, f};
}

inline std::vector<int> rem(const std::vector<int>& f, const std::vector<int>& g, int p) {
    return divmod(f, g, p).second;
}

inline std::vector<int> gcd(std::vector<int> a, std::vector<int> b, int p) {
    while (!b.empty()) {
        auto r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        int c = inv_mod(a.back(), p);
        for (auto& x : a) x = (x * c) % p;
    }
    return a;
}

inline std::vector<int> derivative(const std::vector<int>& a, int p) {
    std::vector<int> r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<int>(i % p) * a[i] % p);
    trim(r);
    return r;
}

} // namespace fpvec

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

struct FieldDescriptor {
    int p;
    std::vector<int> modulus; // monic, little-endian, degree >= 1, over F_p
    std::string label;

    int degree() const { return fpvec::deg(modulus); }

    bool same_as(const FieldDescriptor& o) const {
        return p == o.p && modulus == o.modulus;
    }
};

// Validates p and the modulus. Degree 2/3 moduli are certified irreducible by
// root search, degree 4 additionally by scanning monic quadratic factors.
// Higher degrees only get a separability check (gcd(f, f') = 1).
inline FieldPtr make_field(int p, std::vector<int> modulus, std::string label = "") {
    if (!is_prime(p)) throw config_error("make_field: characteristic must be prime");
    for (auto& c : modulus) c = ((c % p) + p) % p;
    fpvec::trim(modulus);
    int r = fpvec::deg(modulus);
    if (r < 1) throw config_error("make_field: modulus must have degree >= 1");
    if (modulus.back() != 1) throw config_error("make_field: modulus must be monic");
    if (r >= 2 && r <= 4) {
        for (int c = 0; c < p; ++c) {
            int v = 0;
            for (int i = r; i >= 0; --i) v = (v * c + modulus[i]) % p;
            if (v == 0) throw config_error("make_field: modulus has a root in F_p");
        }
    }
    if (r == 4) {
        // no roots already; exclude quadratic factors
        for (int c0 = 0; c0 < p; ++c0)
            for (int c1 = 0; c1 < p; ++c1) {
                std::vector<int> g{c0, c1, 1};
                if (fpvec::rem(modulus, g, p).empty())
                    throw config_error("make_field: modulus has a quadratic factor");
            }
    }
    if (r >= 5) {
        auto d = fpvec::derivative(modulus, p);
        auto g = fpvec::gcd(modulus, d, p);
        if (fpvec::deg(g) != 0) throw config_error("make_field: modulus is inseparable");
    }
    auto f = std::make_shared<FieldDescriptor>();
    f->p = p;
    f->modulus = std::move(modulus);
    f->label = std::move(label);
    return f;
}

inline FieldPtr prime_field(int p) { return make_field(p, {0, 1}, "F" + std::to_string(p)); }
inline FieldPtr gf4() { return make_field(2, {1, 1, 1}, "F4"); }
inline FieldPtr gf8() { return make_field(2, {1, 1, 0, 1}, "F8"); }
inline FieldPtr gf9() { return make_field(3, {1, 0, 1}, "F9"); }

class GF {
public:
    GF() = default;
    GF(FieldPtr field, std::vector<int> residue) : f_(std::move(field)), c_(std::move(residue)) {
        reduce();
    }
    static GF zero(FieldPtr field) { return GF(std::move(field), {}); }
    static GF one(FieldPtr field) { return GF(std::move(field), {1}); }
    // the residue class of the generator symbol (z)
    static GF gen(FieldPtr field) { return GF(std::move(field), {0, 1}); }
    static GF of_int(FieldPtr field, long long v) {
        int p = field->p;
        int r = static_cast<int>(((v % p) + p) % p);
        return GF(std::move(field), {r});
    }

    const FieldPtr& field() const { return f_; }
    const std::vector<int>& residue() const { return c_; }
    int characteristic() const { return f_->p; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    // true iff the element lies in the prime field F_p
    bool in_prime_field() const { return c_.size() <= 1; }

    GF zero_like() const { return GF::zero(f_); }
    GF one_like() const { return GF::one(f_); }

    friend GF operator+(const GF& a, const GF& b) {
        a.check(b);
        return GF(a.f_, fpvec::add(a.c_, b.c_, a.f_->p));
    }
    friend GF operator-(const GF& a, const GF& b) {
        a.check(b);
        return GF(a.f_, fpvec::sub(a.c_, b.c_, a.f_->p));
    }
    friend GF operator*(const GF& a, const GF& b) {
        a.check(b);
        return GF(a.f_, fpvec::mul(a.c_, b.c_, a.f_->p));
    }
    GF operator-() const { return GF(f_, fpvec::sub({}, c_, f_->p)); }

    GF inv() const {
        if (is_zero()) throw config_error("GF: division by zero");
        // extended Euclid on (residue, modulus)
        int p = f_->p;
        std::vector<int> r0 = f_->modulus, r1 = c_, s0 = {}, s1 = {1};
        while (!r1.empty()) {
            auto [q, r2] = fpvec::divmod(r0, r1, p);
            auto s2 = fpvec::sub(s0, fpvec::mul(q, s1, p), p);
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
        }
        // r0 is a non-zero constant
        int cinv = fpvec::inv_mod(r0[0], p);
        for (auto& x : s0) x = (x * cinv) % p;
        return GF(f_, std::move(s0));
    }

    friend GF operator/(const GF& a, const GF& b) { return a * b.inv(); }

    GF pow(uint64_t e) const {
        GF r = one_like(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // x^(p^e)
    GF frobenius(int e) const {
        GF r = *this;
        for (int i = 0; i < e; ++i) r = r.pow(static_cast<uint64_t>(f_->p));
        return r;
    }

    friend bool operator==(const GF& a, const GF& b) {
        return a.f_->same_as(*b.f_) && a.c_ == b.c_;
    }
    friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }

private:
    void reduce() {
        for (auto& x : c_) x = ((x % f_->p) + f_->p) % f_->p;
        fpvec::trim(c_);
        if (fpvec::deg(c_) >= f_->degree()) c_ = fpvec::rem(c_, f_->modulus, f_->p);
    }
    void check(const GF& o) const {
        if (!f_->same_as(*o.f_)) throw config_error("GF: descriptor mismatch");
    }

    FieldPtr f_;
    std::vector<int> c_;
};

// All elements of the field, in a fixed enumeration order.
inline std::vector<GF> field_elements(const FieldPtr& f) {
    int p = f->p, r = f->degree();
    long long n = 1;
    for (int i = 0; i < r; ++i) n *= p;
    std::vector<GF> out;
    out.reserve(static_cast<size_t>(n));
    for (long long k = 0; k < n; ++k) {
        std::vector<int> c;
        long long v = k;
        for (int i = 0; i < r; ++i) { c.push_back(static_cast<int>(v % p)); v /= p; }
        out.emplace_back(f, std::move(c));
    }
    return out;
}

// Embeds x into the field `target`. Constants of the prime field embed as
// constants; otherwise the embedding is fixed by the first root of x's
// modulus found in `target` (enumeration order of field_elements).
inline GF embed_gf(const GF& x, const FieldPtr& target) {
    if (x.field()->same_as(*target)) return x;
    if (x.characteristic() != target->p) throw config_error("embed_gf: characteristic mismatch");
    if (x.in_prime_field())
        return x.is_zero() ? GF::zero(target) : GF::of_int(target, x.residue()[0]);
    if (target->degree() % x.field()->degree() != 0)
        throw config_error("embed_gf: no subfield embedding exists");
    const auto& mod = x.field()->modulus;
    for (const auto& cand : field_elements(target)) {
        GF v = GF::zero(target);
        for (int i = fpvec::deg(mod); i >= 0; --i)
            v = v * cand + GF::of_int(target, mod[i]);
        if (v.is_zero()) {
            GF r = GF::zero(target);
            for (int i = static_cast<int>(x.residue().size()) - 1; i >= 0; --i)
                r = r * cand + GF::of_int(target, x.residue()[i]);
            return r;
        }
    }
    throw config_error("embed_gf: modulus has no root in target field");
}

} // namespace wound

#endif
