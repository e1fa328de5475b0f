#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qshuffle/scalar.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

class PairElement;

/// Finite formal sum of tensor words with Scalar coefficients, tagged with
/// the ambient dimension N.  Terms are kept in (length, lex) order and zero
/// coefficients are never stored.
class Element {
public:
    explicit Element(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("Element: dimension must be positive");
    }

    static Element zero(int dim) { return Element(dim); }

    static Element basis(int dim, const Word& w) {
        Element e(dim);
        e.add_term(w, Scalar(1));
        return e;
    }

    static Element unit(int dim) { return basis(dim, Word{}); }

    int dim() const { return dim_; }
    const std::map<Word, Scalar, LenLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar() : it->second;
    }

    /// Largest word present under (length, lex), i.e. the leading term.
    const Word& leading_word() const {
        if (terms_.empty()) throw std::domain_error("Element::leading_word on zero");
        return terms_.rbegin()->first;
    }

    /// Homogeneous component of the given degree.
    Element component(size_t degree) const {
        Element r(dim_);
        for (const auto& [w, c] : terms_)
            if (w.size() == degree) r.terms_.emplace(w, c);
        return r;
    }

    size_t max_degree() const {
        size_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, w.size());
        return d;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        if (w.max_letter() > dim_)
            throw std::invalid_argument("Element: letter exceeds dimension");
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        check_dim(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    Element& operator-=(const Element& o) {
        check_dim(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element operator-() const {
        Element r(dim_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend Element operator*(const Scalar& s, const Element& e) {
        Element r(e.dim_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : e.terms_) r.terms_.emplace(w, s * c);
        return r;
    }

    bool operator==(const Element& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

    void check_dim(const Element& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("Element: dimension mismatch");
    }

    std::string str() const;

private:
    int dim_;
    std::map<Word, Scalar, LenLexLess> terms_;
};

/// Formal sum on the outer tensor square T(V) outer-tensor T(V): pairs of
/// words with Scalar coefficients.
class PairElement {
public:
    explicit PairElement(int dim) : dim_(dim) {}

    static PairElement basis(int dim, const Word& a, const Word& b) {
        PairElement e(dim);
        e.add_term(a, b, Scalar(1));
        return e;
    }

    int dim() const { return dim_; }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Word& a, const Word& b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Word& a, const Word& b, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PairElement& operator+=(const PairElement& o) {
        if (dim_ != o.dim_) throw std::invalid_argument("PairElement: dimension mismatch");
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }

    friend PairElement operator+(PairElement a, const PairElement& b) { return a += b; }

    PairElement& operator-=(const PairElement& o) {
        if (dim_ != o.dim_) throw std::invalid_argument("PairElement: dimension mismatch");
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }

    friend PairElement operator-(PairElement a, const PairElement& b) { return a -= b; }

    friend PairElement operator*(const Scalar& s, const PairElement& e) {
        PairElement r(e.dim_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : e.terms_) r.terms_.emplace(k, s * c);
        return r;
    }

    /// Outer product of two Elements.
    static PairElement outer(const Element& a, const Element& b) {
        a.check_dim(b);
        PairElement r(a.dim());
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) r.add_term(wa, wb, ca * cb);
        return r;
    }

    bool operator==(const PairElement& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

private:
    int dim_;
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

/// Concatenation product on T(V), extended bilinearly.
inline Element concat(const Element& x, const Element& y) {
    x.check_dim(y);
    Element r(x.dim());
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) r.add_term(wx.concat(wy), cx * cy);
    return r;
}

/// Deconcatenation coproduct: every word splits at every position.
inline PairElement deconcatenate(const Element& x) {
    PairElement r(x.dim());
    for (const auto& [w, c] : x.terms())
        for (size_t i = 0; i <= w.size(); ++i)
            r.add_term(w.sub(0, i), w.sub(i, w.size()), c);
    return r;
}

/// Counit: the coefficient of the empty word.
inline Scalar counit(const Element& x) { return x.coeff(Word{}); }

/// Reduced coproduct on Ker(counit): drops the two boundary splits.
inline PairElement reduced_coproduct(const Element& x) {
    if (!counit(x).is_zero())
        throw std::invalid_argument("reduced_coproduct: nonzero constant term");
    PairElement r(x.dim());
    for (const auto& [w, c] : x.terms())
        for (size_t i = 1; i + 1 <= w.size(); ++i)
            r.add_term(w.sub(0, i), w.sub(i, w.size()), c);
    return r;
}

namespace detail {

/// Parser for the element grammar: a sum of `<scalar>*<word>` terms where a
/// word is dot-separated letters (`e1.e2`) and the unit word is `1`.  Scalar
/// subexpressions reuse the coefficient grammar.
class ElementParser {
public:
    ElementParser(std::string_view s, int dim) : s_(s), dim_(dim) {}

    Element parse() {
        Element acc(dim_);
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        term(acc, neg);
        for (;;) {
            skip_ws();
            if (eat('+')) term(acc, false);
            else if (eat('-')) term(acc, true);
            else break;
        }
        skip_ws();
        if (i_ != s_.size()) throw ParseError("unexpected trailing input", i_);
        return acc;
    }

private:
    void term(Element& acc, bool negated) {
        Scalar coeff(1);
        Word word;
        bool have_word = false;
        bool dividing = false;
        for (;;) {
            skip_ws();
            if (i_ < s_.size() && s_[i_] == 'e') {
                if (dividing) throw ParseError("cannot divide by a tensor word", i_);
                if (have_word)
                    throw ParseError("more than one tensor word in a term", i_);
                word = parse_word();
                have_word = true;
            } else {
                size_t at = i_;
                Scalar f = scalar_factor();
                if (dividing) {
                    if (f.is_zero()) throw ParseError("division by zero", at);
                    coeff /= f;
                } else {
                    coeff *= f;
                }
            }
            skip_ws();
            if (eat('*')) { dividing = false; continue; }
            if (eat('/')) { dividing = true; continue; }
            break;
        }
        acc.add_term(word, negated ? -coeff : coeff);
    }

    // A single scalar atom: literal, q-power or parenthesized scalar expr.
    Scalar scalar_factor() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        size_t start = i_;
        if (s_[i_] == '(') {
            int depth = 0;
            size_t j = i_;
            for (; j < s_.size(); ++j) {
                if (s_[j] == '(') ++depth;
                if (s_[j] == ')' && --depth == 0) break;
            }
            if (j == s_.size()) throw ParseError("expected ')'", i_);
            Scalar v = Scalar::parse(s_.substr(i_ + 1, j - i_ - 1));
            i_ = j + 1;
            return v;
        }
        char c = s_[i_];
        if (c == 'q') {
            ++i_;
            if (eat('^')) return Scalar::q_pow(parse_sint());
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt n = parse_uint();
            if (i_ < s_.size() && s_[i_] == '/') {
                size_t j = i_ + 1;
                while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
                if (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
                    i_ = j;
                    BigInt d = parse_uint();
                    if (d == 0) throw ParseError("zero-denominator literal", start);
                    return Scalar(Rational(n, d));
                }
            }
            return Scalar(Rational(n));
        }
        throw ParseError("expected a scalar factor or word", i_);
    }

    Word parse_word() {
        std::vector<int> letters;
        for (;;) {
            if (i_ >= s_.size() || s_[i_] != 'e')
                throw ParseError("expected a letter 'e<k>'", i_);
            ++i_;
            size_t at = i_;
            BigInt v = parse_uint();
            if (v < 1 || v > dim_)
                throw ParseError("letter index out of range for dimension " +
                                     std::to_string(dim_),
                                 at);
            letters.push_back(int(v));
            if (i_ < s_.size() && s_[i_] == '.') {
                ++i_;
                continue;
            }
            break;
        }
        return Word(std::move(letters));
    }

    BigInt parse_uint() {
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == start) throw ParseError("expected digits", i_);
        return BigInt(std::string(s_.substr(start, i_ - start)));
    }

    int parse_sint() {
        bool neg = eat('-');
        if (!neg) eat('+');
        size_t at = i_;
        BigInt v = parse_uint();
        if (v > 1000000) throw ParseError("exponent out of range", at);
        return neg ? -int(v) : int(v);
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
    int dim_;
};

} // namespace detail

inline Element parse_element(std::string_view text, int dim) {
    return detail::ElementParser(text, dim).parse();
}

inline std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        bool negated = false;
        // Pull a leading minus out of monomial coefficients for readability.
        if (cs.front() == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        bool needs_parens = cs.find_first_of("+-", 1) != std::string::npos ||
                            cs.front() == '-';
        std::string ts;
        if (w.empty()) {
            ts = needs_parens ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            ts = w.str();
        } else {
            ts = (needs_parens ? "(" + cs + ")" : cs) + "*" + w.str();
        }
        if (out.empty())
            out = negated ? "-" + ts : ts;
        else
            out += (negated ? " - " : " + ") + ts;
    }
    return out;
}

} // namespace qshuffle
