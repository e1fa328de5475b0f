#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qshuffle {

/// A tensor word over the alphabet {1..N}: a finite sequence of letters.
/// The empty word is the unit of the concatenation product.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> ls) : letters_(ls) { check(); }
    explicit Word(std::vector<int> ls) : letters_(std::move(ls)) { check(); }

    static Word letter(int i) { return Word{{i}}; }

    const std::vector<int>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](size_t i) const { return letters_[i]; }
    int max_letter() const {
        int m = 0;
        for (int l : letters_) m = std::max(m, l);
        return m;
    }

    Word concat(const Word& o) const {
        std::vector<int> ls = letters_;
        ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
        return Word(std::move(ls));
    }

    /// Subword [from, to).
    Word sub(size_t from, size_t to) const {
        if (from > to || to > size()) throw std::out_of_range("Word::sub");
        return Word(std::vector<int>(letters_.begin() + long(from), letters_.begin() + long(to)));
    }

    bool operator==(const Word&) const = default;
    /// Default comparison is lexicographic with the prefix convention.
    auto operator<=>(const Word&) const = default;

    /// Lexicographic order with the prefix convention (a prefix precedes its
    /// extensions).  This is the order Lyndon words are defined against.
    bool lex_less(const Word& o) const { return letters_ < o.letters_; }

    /// Graded order: first by length, then lexicographically.  Used for
    /// serialization and for the triangular change-of-basis statements.
    bool lenlex_less(const Word& o) const {
        if (size() != o.size()) return size() < o.size();
        return letters_ < o.letters_;
    }

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string out;
        for (size_t i = 0; i < letters_.size(); ++i) {
            if (i) out += '.';
            out += "e" + std::to_string(letters_[i]);
        }
        return out;
    }

private:
    void check() const {
        for (int l : letters_)
            if (l < 1) throw std::invalid_argument("Word: letters must be >= 1");
    }

    std::vector<int> letters_;
};

struct LenLexLess {
    bool operator()(const Word& a, const Word& b) const { return a.lenlex_less(b); }
};

struct LexLess {
    bool operator()(const Word& a, const Word& b) const { return a.lex_less(b); }
};

} // namespace qshuffle
