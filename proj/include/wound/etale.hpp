#ifndef WOUND_ETALE_HPP
#define WOUND_ETALE_HPP

// Étale quotient algebras K[x_1,...,x_s]/(f_1(x_1),...,f_s(x_s)) with each
// modulus univariate and separable. Elements are kept in normal form: degree
// in x_i strictly below deg f_i, stored densely in mixed-radix order.

#include <memory>
#include <utility>
#include <vector>

#include "wound/errors.hpp"
#include "wound/poly.hpp"

namespace wound {

template <class K>
class EtaleAlgebra;

template <class K>
using EtalePtr = std::shared_ptr<const EtaleAlgebra<K>>;

template <class K>
class EtaleAlgebra : public std::enable_shared_from_this<EtaleAlgebra<K>> {
public:
    static EtalePtr<K> make(std::vector<Poly<K>> moduli) {
        if (moduli.empty()) throw config_error("EtaleAlgebra: at least one modulus required");
        for (auto& f : moduli) {
            if (f.degree() < 1) throw config_error("EtaleAlgebra: modulus must have degree >= 1");
            f = poly_monic(f);
            Poly<K> d = f.derivative();
            if (d.is_zero() || poly_gcd(f, d).degree() != 0)
                throw config_error("EtaleAlgebra: inseparable modulus rejected");
        }
        return EtalePtr<K>(new EtaleAlgebra(std::move(moduli)));
    }

    const std::vector<Poly<K>>& moduli() const { return moduli_; }
    int num_gens() const { return static_cast<int>(moduli_.size()); }
    int dim() const { return dim_; }
    int gen_degree(int i) const { return moduli_[i].degree(); }
    const K& base() const { return moduli_[0].base(); }

    // residue coefficients of x_i^j in normal form, 0 <= j <= 2*(d_i - 1)
    const std::vector<K>& power(int i, int j) const { return powtab_[i][j]; }

    int stride(int i) const { return strides_[i]; }

    bool same_as(const EtaleAlgebra& o) const { return moduli_ == o.moduli_; }

private:
    explicit EtaleAlgebra(std::vector<Poly<K>> moduli) : moduli_(std::move(moduli)) {
        dim_ = 1;
        for (const auto& f : moduli_) {
            strides_.push_back(dim_);
            dim_ *= f.degree();
        }
        const K z = base().zero_like();
        for (const auto& f : moduli_) {
            int d = f.degree();
            std::vector<std::vector<K>> tab;
            Poly<K> x = Poly<K>::variable(z, f.var());
            Poly<K> cur = x.one_like();
            for (int j = 0; j <= 2 * (d - 1); ++j) {
                Poly<K> red = poly_rem(cur, f);
                std::vector<K> row(static_cast<size_t>(d), z);
                for (int c = 0; c <= red.degree(); ++c) row[c] = red.coeff(c);
                tab.push_back(std::move(row));
                cur = cur * x;
            }
            powtab_.push_back(std::move(tab));
        }
    }

    std::vector<Poly<K>> moduli_;
    std::vector<std::vector<std::vector<K>>> powtab_;
    std::vector<int> strides_;
    int dim_ = 0;
};

template <class K>
class EtaleElt {
public:
    EtaleElt(EtalePtr<K> alg, std::vector<K> coeffs) : a_(std::move(alg)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != a_->dim())
            throw config_error("EtaleElt: coefficient table size mismatch");
    }
    static EtaleElt zero(const EtalePtr<K>& alg) {
        return EtaleElt(alg, std::vector<K>(static_cast<size_t>(alg->dim()),
                                            alg->base().zero_like()));
    }
    static EtaleElt scalar(const EtalePtr<K>& alg, const K& v) {
        EtaleElt r = zero(alg);
        r.c_[0] = v;
        return r;
    }
    static EtaleElt generator(const EtalePtr<K>& alg, int i) {
        EtaleElt r = zero(alg);
        r.c_[static_cast<size_t>(alg->stride(i))] = alg->base().one_like();
        return r;
    }

    const EtalePtr<K>& algebra() const { return a_; }
    const std::vector<K>& coeffs() const { return c_; }
    int characteristic() const { return a_->base().characteristic(); }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    EtaleElt zero_like() const { return zero(a_); }
    EtaleElt one_like() const { return scalar(a_, a_->base().one_like()); }

    friend EtaleElt operator+(const EtaleElt& x, const EtaleElt& y) {
        x.check(y);
        EtaleElt r = x;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + y.c_[i];
        return r;
    }
    friend EtaleElt operator-(const EtaleElt& x, const EtaleElt& y) { return x + (-y); }
    EtaleElt operator-() const {
        EtaleElt r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend EtaleElt operator*(const EtaleElt& x, const EtaleElt& y) {
        x.check(y);
        const auto& A = *x.a_;
        EtaleElt r = zero(x.a_);
        int s = A.num_gens();
        std::vector<int> e1(s), e2(s);
        for (int i1 = 0; i1 < A.dim(); ++i1) {
            if (x.c_[i1].is_zero()) continue;
            decompose(A, i1, e1);
            for (int i2 = 0; i2 < A.dim(); ++i2) {
                if (y.c_[i2].is_zero()) continue;
                decompose(A, i2, e2);
                K coeff = x.c_[i1] * y.c_[i2];
                // expand the reduced product of x_k^(e1+e2) across all generators
                std::vector<std::pair<int, K>> terms{{0, coeff}};
                for (int k = 0; k < s && !terms.empty(); ++k) {
                    const auto& row = A.power(k, e1[k] + e2[k]);
                    std::vector<std::pair<int, K>> next;
                    for (const auto& [idx, val] : terms)
                        for (int j = 0; j < static_cast<int>(row.size()); ++j) {
                            if (row[j].is_zero()) continue;
                            next.emplace_back(idx + j * A.stride(k), val * row[j]);
                        }
                    terms = std::move(next);
                }
                for (const auto& [idx, val] : terms) r.c_[idx] = r.c_[idx] + val;
            }
        }
        return r;
    }

    friend bool operator==(const EtaleElt& x, const EtaleElt& y) {
        return x.a_->same_as(*y.a_) && x.c_ == y.c_;
    }
    friend bool operator!=(const EtaleElt& x, const EtaleElt& y) { return !(x == y); }

    template <class F>
    EtaleElt map_coeffs(F&& f) const {
        EtaleElt r = *this;
        for (auto& x : r.c_) x = f(x);
        return r;
    }

private:
    static void decompose(const EtaleAlgebra<K>& A, int idx, std::vector<int>& e) {
        for (int k = 0; k < A.num_gens(); ++k) {
            e[k] = idx % A.gen_degree(k);
            idx /= A.gen_degree(k);
        }
    }
    void check(const EtaleElt& y) const {
        if (!a_->same_as(*y.a_)) throw config_error("EtaleElt: algebra mismatch");
    }

    EtalePtr<K> a_;
    std::vector<K> c_;
};

// K[x]/(f) tensor K[y]/(g) = K[x,y]/(f(x), g(y)); dimension multiplies.
template <class K>
EtalePtr<K> etale_tensor(const EtalePtr<K>& a, const EtalePtr<K>& b) {
    std::vector<Poly<K>> moduli = a->moduli();
    for (const auto& f : b->moduli()) moduli.push_back(f);
    return EtaleAlgebra<K>::make(std::move(moduli));
}

// image of an element of the left (resp. right) factor inside the tensor
template <class K>
EtaleElt<K> etale_embed_left(const EtalePtr<K>& tensor, const EtaleElt<K>& x) {
    std::vector<K> out(static_cast<size_t>(tensor->dim()), tensor->base().zero_like());
    for (int i = 0; i < x.algebra()->dim(); ++i) out[static_cast<size_t>(i)] = x.coeffs()[i];
    return EtaleElt<K>(tensor, std::move(out));
}

template <class K>
EtaleElt<K> etale_embed_right(const EtalePtr<K>& tensor, const EtaleElt<K>& x) {
    int ldim = tensor->dim() / x.algebra()->dim();
    std::vector<K> out(static_cast<size_t>(tensor->dim()), tensor->base().zero_like());
    for (int i = 0; i < x.algebra()->dim(); ++i)
        out[static_cast<size_t>(i) * ldim] = x.coeffs()[i];
    return EtaleElt<K>(tensor, std::move(out));
}

} // namespace wound

#endif
