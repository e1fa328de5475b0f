#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qshuffle/rational.hpp"

namespace qshuffle {

/// Laurent polynomial in a single indeterminate q over the rationals.
/// Terms are stored exponent -> coefficient; zero coefficients are never kept.
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly term(int exp, const Rational& coeff) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }

    static LaurentPoly q() { return term(1, 1); }

    const std::map<int, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second == 1;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    bool is_monomial() const { return terms_.size() <= 1; }

    /// Lowest exponent present. Undefined on zero.
    int min_exp() const { return terms_.begin()->first; }
    /// Highest exponent present. Undefined on zero.
    int max_exp() const { return terms_.rbegin()->first; }

    Rational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational leading_coeff() const {
        return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) {
            Rational& slot = terms_[e];
            slot += c;
            if (slot == 0) terms_.erase(e);
        }
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) {
            Rational& slot = terms_[e];
            slot -= c;
            if (slot == 0) terms_.erase(e);
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Rational& slot = r.terms_[ea + eb];
                slot += ca * cb;
                if (slot == 0) r.terms_.erase(ea + eb);
            }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiply by q^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    /// Nonnegative integer power.
    LaurentPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
        LaurentPoly r(1), base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    /// Exact evaluation at q = q0.
    Rational eval(const Rational& q0) const {
        if (q0 == 0) {
            if (!terms_.empty() && min_exp() < 0)
                throw std::domain_error("evaluation at q=0 with negative exponents");
            return coeff(0);
        }
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational p = 1;
            BigInt n = numerator(q0), d = denominator(q0);
            if (e >= 0)
                p = Rational(boost::multiprecision::pow(n, unsigned(e)),
                             boost::multiprecision::pow(d, unsigned(e)));
            else
                p = Rational(boost::multiprecision::pow(d, unsigned(-e)),
                             boost::multiprecision::pow(n, unsigned(-e)));
            acc += c * p;
        }
        return acc;
    }

    bool operator==(const LaurentPoly&) const = default;

    /// Rendering with descending exponents, e.g. "q^3+2*q+1", "1-q^-2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string t = term_str(it->first, it->second);
            if (out.empty()) {
                out = t;
            } else if (t.front() == '-') {
                out += "-" + t.substr(1);
            } else {
                out += "+" + t;
            }
        }
        return out;
    }

private:
    static std::string term_str(int exp, const Rational& c) {
        std::string cs = c.str();
        if (exp == 0) return cs;
        std::string qs = exp == 1 ? "q" : "q^" + std::to_string(exp);
        if (c == 1) return qs;
        if (c == -1) return "-" + qs;
        return cs + "*" + qs;
    }

    std::map<int, Rational> terms_;
};

namespace detail {

// Dense ordinary-polynomial helpers used for fraction reduction.  A Dense is
// the coefficient vector of a polynomial with nonzero trailing entry removed.
using Dense = std::vector<Rational>;

inline void dense_trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Split a nonzero Laurent polynomial as q^valuation * P with P(0) != 0.
inline std::pair<int, Dense> laurent_decompose(const LaurentPoly& p) {
    int v = p.min_exp();
    Dense d(static_cast<size_t>(p.max_exp() - v) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - v)] = c;
    return {v, d};
}

inline LaurentPoly laurent_recompose(int v, const Dense& d) {
    LaurentPoly p;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) p += LaurentPoly::term(v + int(i), d[i]);
    return p;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    dense_trim(r);
    return r;
}

/// Euclidean division a = qt*b + rem over the rationals.
inline std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Dense qt;
    if (a.size() >= b.size()) qt.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        qt[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        dense_trim(a); // leading term cancels exactly, so the degree drops
    }
    dense_trim(qt);
    return {qt, a};
}

inline Dense dense_exact_div(const Dense& a, const Dense& b) {
    auto [qt, rem] = dense_divmod(a, b);
    if (!rem.empty()) throw std::domain_error("inexact polynomial division");
    return qt;
}

/// Monic gcd over the rationals.
inline Dense dense_gcd(Dense a, Dense b) {
    while (!b.empty()) {
        auto [qt, rem] = dense_divmod(std::move(a), b);
        (void)qt;
        a = std::move(b);
        b = std::move(rem);
        if (!b.empty()) {
            Rational lc = b.back();
            for (auto& c : b) c /= lc;
        }
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

} // namespace detail

} // namespace qshuffle
