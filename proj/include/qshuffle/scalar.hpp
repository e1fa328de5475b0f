#pragma once

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    size_t position;
};

/// Exact coefficient: an element of the fraction field of Laurent polynomials
/// in q over the rationals.
///
/// Canonical form: num/den with den a monic ordinary polynomial, den(0) != 0,
/// gcd(num, den) a unit.  Plain Laurent polynomials therefore have den == 1,
/// and rational constants additionally have constant num, so demotion out of
/// the fraction representation is automatic.
class Scalar {
public:
    enum class Kind { rational, laurent, fraction };

    Scalar() : den_(1) {}
    Scalar(int c) : num_(c), den_(1) {}
    Scalar(const Rational& c) : num_(c), den_(1) {}
    Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        reduce();
    }

    static Scalar q() { return Scalar(LaurentPoly::q()); }
    static Scalar q_pow(int k) { return Scalar(LaurentPoly::term(k, 1)); }

    Kind kind() const {
        if (!den_.is_one()) return Kind::fraction;
        return num_.is_constant() ? Kind::rational : Kind::laurent;
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    /// Value as a rational constant; valid only when kind() == rational.
    Rational as_rational() const {
        if (kind() != Kind::rational)
            throw std::domain_error("Scalar is not a rational constant");
        return num_.coeff(0);
    }

    Scalar operator-() const { return raw(-num_, den_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ + b.num_, a.den_);
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ - b.num_, a.den_);
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, a.den_);
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        return Scalar(den_, num_);
    }

    /// Exact evaluation at q = q0.  Reduction has already happened at
    /// construction, so removable singularities are gone.
    Rational specialize(const Rational& q0) const {
        Rational d = den_.eval(q0);
        if (d == 0) throw std::domain_error("Scalar: denominator vanishes at q0");
        return num_.eval(q0) / d;
    }

    bool operator==(const Scalar&) const = default;

    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string ns = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
        return ns + "/(" + den_.str() + ")";
    }

    static Scalar parse(std::string_view text);

private:
    // Bypasses reduction for results already in canonical form.
    static Scalar raw(LaurentPoly num, LaurentPoly den) {
        Scalar s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        return s;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        if (den_.is_one()) return;
        auto [vn, pn] = detail::laurent_decompose(num_);
        auto [vd, pd] = detail::laurent_decompose(den_);
        detail::Dense g = detail::dense_gcd(pn, pd);
        if (g.size() > 1) {
            pn = detail::dense_exact_div(pn, g);
            pd = detail::dense_exact_div(pd, g);
        }
        Rational lc = pd.back();
        for (auto& c : pd) c /= lc;
        for (auto& c : pn) c /= lc;
        num_ = detail::laurent_recompose(vn - vd, pn);
        den_ = detail::laurent_recompose(0, pd);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

namespace detail {

/// Recursive-descent parser for the coefficient grammar: signed rational
/// literals (`3`, `-1/2`), `q`, `q^k`, products, quotients, sums and
/// parentheses.
class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (i_ != s_.size()) throw ParseError("unexpected trailing input", i_);
        return v;
    }

    // Exposed so the element parser can share atoms and position state.
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            skip_ws();
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    size_t pos() const { return i_; }

private:
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            skip_ws();
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) throw ParseError("division by zero", i_);
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        skip_ws();
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return atom();
    }

    Scalar atom() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Scalar v = expr();
            skip_ws();
            if (!eat(')')) throw ParseError("expected ')'", i_);
            return v;
        }
        if (c == 'q') {
            ++i_;
            skip_ws();
            if (eat('^')) return Scalar::q_pow(parse_exponent());
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        throw ParseError("expected a number, 'q' or '('", i_);
    }

    Scalar rational_literal() {
        BigInt n = parse_uint();
        skip_ws();
        // Only treat '/' as part of the literal when a digit follows; other
        // divisors belong to the enclosing term.
        if (i_ < s_.size() && s_[i_] == '/') {
            size_t j = i_ + 1;
            while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
            if (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
                size_t dpos = i_;
                i_ = j;
                BigInt d = parse_uint();
                if (d == 0) throw ParseError("zero-denominator literal", dpos);
                return Scalar(Rational(n, d));
            }
        }
        return Scalar(Rational(n));
    }

    BigInt parse_uint() {
        skip_ws();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == start) throw ParseError("expected digits", i_);
        return BigInt(std::string(s_.substr(start, i_ - start)));
    }

    int parse_exponent() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        size_t start = i_;
        BigInt v = parse_uint();
        if (v > 1000000) throw ParseError("exponent out of range", start);
        int k = static_cast<int>(v);
        return neg ? -k : k;
    }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    std::string_view s_;
    size_t i_ = 0;
};

} // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
    return detail::ScalarParser(text).parse();
}

inline Scalar parse_scalar(std::string_view text) { return Scalar::parse(text); }

inline std::string to_string(const Scalar& s) { return s.str(); }

} // namespace qshuffle
