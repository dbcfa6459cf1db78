#ifndef WOUND_FORMAT_HPP
#define WOUND_FORMAT_HPP

// Text rendering of tower elements in the same syntax the parser accepts.

#include <string>
#include <vector>

#include "wound/etale.hpp"
#include "wound/gf.hpp"
#include "wound/mpoly.hpp"
#include "wound/poly.hpp"
#include "wound/ratfunc.hpp"
#include "wound/series.hpp"

namespace wound {

inline std::string to_text(const GF& x) {
    if (x.is_zero()) return "0";
    std::string s;
    const auto& c = x.residue();
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) { s += std::to_string(c[i]); continue; }
        if (c[i] != 1) s += std::to_string(c[i]) + "*";
        s += "z";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

namespace detail {
inline bool needs_parens(const std::string& s) {
    return s.find('+') != std::string::npos || s.find('-') != std::string::npos ||
           s.find('/') != std::string::npos;
}
inline std::string coeff_wrap(const std::string& s) {
    return detail::needs_parens(s) ? "(" + s + ")" : s;
}
} // namespace detail

template <class K>
std::string to_text(const Poly<K>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        K c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string cs = to_text(c);
        if (i == 0) { s += detail::coeff_wrap(cs); continue; }
        if (cs != "1") s += detail::coeff_wrap(cs) + "*";
        s += std::string(1, f.var());
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

template <class K>
std::string to_text(const RatFunc<K>& x) {
    std::string n = to_text(x.num());
    if (x.is_poly() && x.den().lead() == x.den().lead().one_like()) return n;
    return "(" + n + ")/(" + to_text(x.den()) + ")";
}

template <class K>
std::string to_text(const TruncSeries<K>& s) {
    std::string out;
    for (int i = 0; i < s.precision(); ++i) {
        K c = s.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = to_text(c);
        if (i == 0) { out += detail::coeff_wrap(cs); continue; }
        if (cs != "1") out += detail::coeff_wrap(cs) + "*";
        out += std::string(1, s.var());
        if (i > 1) out += "^" + std::to_string(i);
    }
    std::string tail = "O(" + std::string(1, s.var()) + "^" + std::to_string(s.precision()) + ")";
    return out.empty() ? tail : out + "+" + tail;
}

template <class K>
std::string to_text(const EtaleElt<K>& x) {
    const auto& A = *x.algebra();
    std::string out;
    for (int idx = 0; idx < A.dim(); ++idx) {
        const K& c = x.coeffs()[idx];
        if (c.is_zero()) continue;
        std::string mono;
        int rem = idx;
        for (int k = 0; k < A.num_gens(); ++k) {
            int e = rem % A.gen_degree(k);
            rem /= A.gen_degree(k);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string cs = to_text(c);
        std::string term;
        if (mono.empty()) term = detail::coeff_wrap(cs);
        else if (cs == "1") term = mono;
        else term = detail::coeff_wrap(cs) + "*" + mono;
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

// variables are printed g0, g1, ... unless names are supplied
template <class K>
std::string to_text(const MPoly<K>& f, const std::vector<std::string>& names = {}) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "g" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = to_text(c);
        std::string term;
        if (mono.empty()) term = detail::coeff_wrap(cs);
        else if (cs == "1") term = mono;
        else term = detail::coeff_wrap(cs) + "*" + mono;
        if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

} // namespace wound

#endif
