#ifndef WOUND_PARSE_HPP
#define WOUND_PARSE_HPP

// Tiny expression parser for the textual element syntax: polynomials as
// `2*t^3+t+1`, fractions as `(num)/(den)`, finite-field scalars as
// polynomials in `z`, series as `u^3+t*u^9+O(u^27)`. Expressions evaluate
// directly in a caller-supplied ring with named generators.

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "wound/errors.hpp"
#include "wound/gf.hpp"
#include "wound/ratfunc.hpp"
#include "wound/ring.hpp"
#include "wound/series.hpp"

namespace wound {

template <class R>
class ExprParser {
public:
    ExprParser(std::string src, std::map<std::string, R> env, R one)
        : s_(std::move(src)), env_(std::move(env)), one_(std::move(one)) {}

    R parse() {
        R r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw config_error("parse: trailing input at '" + rest() + "'");
        return r;
    }

private:
    R expr() {
        skip_ws();
        bool neg = accept('-');
        R r = term();
        if (neg) r = -r;
        for (;;) {
            skip_ws();
            if (accept('+')) r = r + term();
            else if (accept('-')) r = r - term();
            else return r;
        }
    }

    R term() {
        R r = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) r = r * factor();
            else if (accept('/')) {
                R d = factor();
                if constexpr (requires(const R& x) { x.inv(); }) r = r * d.inv();
                else throw config_error("parse: division not supported in this ring");
            } else return r;
        }
    }

    R factor() {
        R r = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            uint64_t e = number();
            r = ring_pow(r, e);
        }
        return r;
    }

    R atom() {
        skip_ws();
        if (accept('(')) {
            R r = expr();
            skip_ws();
            if (!accept(')')) throw config_error("parse: expected ')' at '" + rest() + "'");
            return r;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            uint64_t n = number();
            R r = one_.zero_like();
            for (uint64_t i = 0; i < n % modulus_guard(); ++i) r = r + one_;
            return r;
        }
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            auto it = env_.find(name);
            if (it == env_.end()) throw config_error("parse: unknown symbol '" + name + "'");
            return it->second;
        }
        throw config_error("parse: unexpected input at '" + rest() + "'");
    }

    uint64_t number() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw config_error("parse: expected number at '" + rest() + "'");
        uint64_t n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            n = n * 10 + static_cast<uint64_t>(s_[pos_++] - '0');
        return n;
    }

    uint64_t modulus_guard() const {
        // integer literals reduce mod p; keeps the repeated-addition loop short
        return static_cast<uint64_t>(one_.characteristic());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    std::string rest() const { return s_.substr(pos_); }

    std::string s_;
    std::map<std::string, R> env_;
    R one_;
    size_t pos_ = 0;
};

template <class R>
R parse_expr(const std::string& src, std::map<std::string, R> env, const R& one) {
    return ExprParser<R>(src, std::move(env), one).parse();
}

// finite-field scalar written as a polynomial in the generator symbol `z`
inline GF parse_scalar(const FieldPtr& f, const std::string& src) {
    std::map<std::string, GF> env{{"z", GF::gen(f)}};
    return parse_expr(src, std::move(env), GF::one(f));
}

// polynomial over F_q in one variable
inline Poly<GF> parse_poly(const FieldPtr& f, char var, const std::string& src) {
    GF z = GF::zero(f);
    using P = Poly<GF>;
    std::map<std::string, P> env{{std::string(1, var), P::variable(z, var)},
                                 {"z", P::constant(GF::gen(f), var)}};
    return parse_expr(src, std::move(env), P::constant(GF::one(f), var));
}

// rational function over F_q, e.g. `(t^2+1)/(t-1)` or a plain polynomial
inline RatFunc<GF> parse_ratfunc(const FieldPtr& f, char var, const std::string& src) {
    GF z = GF::zero(f);
    using Q = RatFunc<GF>;
    std::map<std::string, Q> env{{std::string(1, var), Q::variable(z, var)},
                                 {"z", Q::constant(GF::gen(f), var)}};
    return parse_expr(src, std::move(env), Q::one(z, var));
}

// series over k = F_q(t) in `u`, e.g. `u^3+t*u^9+O(u^27)`; the O(...) term is
// mandatory and fixes the precision
inline TruncSeries<RatFunc<GF>> parse_series(const FieldPtr& f, const std::string& src,
                                             char var = 'u', char tvar = 't') {
    auto opos = src.rfind("O(");
    if (opos == std::string::npos)
        throw config_error("parse_series: missing O(" + std::string(1, var) + "^N) marker");
    auto close = src.find(')', opos);
    if (close == std::string::npos) throw config_error("parse_series: unterminated O(...)");
    std::string inner = src.substr(opos + 2, close - opos - 2); // u^N or u
    int prec = 1;
    auto caret = inner.find('^');
    if (caret != std::string::npos) prec = std::stoi(inner.substr(caret + 1));
    std::string body = src.substr(0, opos);
    while (!body.empty() && (body.back() == '+' || std::isspace(static_cast<unsigned char>(body.back()))))
        body.pop_back();

    using K = RatFunc<GF>;
    using S = TruncSeries<K>;
    K kzero = K::zero(GF::zero(f), tvar);
    S szero = S::zero(kzero, var, prec);
    if (body.empty()) return szero;
    std::map<std::string, S> env{
        {std::string(1, var), S::variable(kzero, var, prec)},
        {std::string(1, tvar), S::constant(K::variable(GF::zero(f), tvar), var, prec)},
        {"z", S::constant(K::constant(GF::gen(f), tvar), var, prec)}};
    return parse_expr(body, std::move(env), szero.one_like());
}

} // namespace wound

#endif
