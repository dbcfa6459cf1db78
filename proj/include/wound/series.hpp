#ifndef WOUND_SERIES_HPP
#define WOUND_SERIES_HPP

// Truncated power series: exact coefficients below the precision, everything
// at or above it forgotten. Binary operations land at the lower precision.

#include <optional>
#include <utility>
#include <vector>

#include "wound/errors.hpp"

namespace wound {

template <class K>
class TruncSeries {
public:
    TruncSeries(K base, char var, int prec)
        : base_(std::move(base)), var_(var), prec_(prec),
          c_(static_cast<size_t>(prec), base_) {
        if (prec < 1) throw config_error("TruncSeries: precision must be >= 1");
    }
    TruncSeries(K base, char var, int prec, std::vector<K> coeffs)
        : TruncSeries(std::move(base), var, prec) {
        for (size_t i = 0; i < c_.size() && i < coeffs.size(); ++i) c_[i] = coeffs[i];
    }

    static TruncSeries zero(const K& base, char var, int prec) {
        return TruncSeries(base, var, prec);
    }
    static TruncSeries constant(const K& v, char var, int prec) {
        TruncSeries r(v.zero_like(), var, prec);
        r.c_[0] = v;
        return r;
    }
    static TruncSeries variable(const K& base, char var, int prec) {
        TruncSeries r(base, var, prec);
        if (prec > 1) r.c_[1] = base.one_like();
        return r;
    }

    char var() const { return var_; }
    int precision() const { return prec_; }
    const K& base() const { return base_; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const { return (i >= 0 && i < prec_) ? c_[i] : base_; }
    int characteristic() const { return base_.characteristic(); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    TruncSeries zero_like() const { return zero(base_, var_, prec_); }
    TruncSeries one_like() const { return constant(base_.one_like(), var_, prec_); }

    TruncSeries truncate(int prec) const {
        if (prec > prec_) throw config_error("TruncSeries: cannot raise precision");
        TruncSeries r(base_, var_, prec);
        for (int i = 0; i < prec; ++i) r.c_[i] = c_[i];
        return r;
    }

    // index of the first non-zero coefficient; nullopt means ">= precision"
    std::optional<int> valuation() const {
        for (int i = 0; i < prec_; ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.base_, a.var_, std::min(a.prec_, b.prec_));
        for (int i = 0; i < r.prec_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.base_, a.var_, std::min(a.prec_, b.prec_));
        for (int i = 0; i < r.prec_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j < r.prec_; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend TruncSeries operator*(const K& s, const TruncSeries& a) {
        TruncSeries r = a;
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.var_ == b.var_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    void check(const TruncSeries& b) const {
        if (var_ != b.var_) throw config_error("TruncSeries: variable mismatch");
    }

    K base_;
    char var_;
    int prec_;
    std::vector<K> c_;
};

} // namespace wound

#endif
