#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qshuffle {

/// A permutation of {1..n} in one-line notation: images[k-1] = w(k).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || size_t(v) > images_.size() || seen[size_t(v) - 1])
                throw std::invalid_argument("Permutation: not a bijection of {1..n}");
            seen[size_t(v) - 1] = true;
        }
    }

    static Permutation identity(size_t n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    /// Adjacent transposition s_i = (i, i+1) inside S_n.
    static Permutation transposition(size_t n, int i) {
        Permutation p = identity(n);
        std::swap(p.images_[size_t(i) - 1], p.images_[size_t(i)]);
        return p;
    }

    size_t size() const { return images_.size(); }
    int operator()(int k) const { return images_[size_t(k) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (size_t k = 0; k < images_.size(); ++k) im[size_t(images_[k]) - 1] = int(k) + 1;
        return Permutation(std::move(im));
    }

    /// Composition as functions: (a*b)(k) = a(b(k)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size())
            throw std::invalid_argument("Permutation: size mismatch");
        std::vector<int> im(a.size());
        for (size_t k = 0; k < a.size(); ++k) im[k] = a(b(int(k) + 1));
        return Permutation(std::move(im));
    }

    size_t inversions() const {
        size_t n = 0;
        for (size_t i = 0; i < images_.size(); ++i)
            for (size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++n;
        return n;
    }

    bool is_identity() const {
        for (size_t k = 0; k < images_.size(); ++k)
            if (images_[k] != int(k) + 1) return false;
        return true;
    }

    /// True when w(1) < ... < w(i) and w(i+1) < ... < w(i+j).
    bool is_shuffle(size_t i, size_t j) const {
        if (i + j != size()) return false;
        for (size_t k = 1; k < i; ++k)
            if (images_[k - 1] > images_[k]) return false;
        for (size_t k = i + 1; k < i + j; ++k)
            if (images_[k - 1] > images_[k]) return false;
        return true;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// The block-swap permutation chi_{ij} in S_{i+j}: the first i positions move
/// past the last j.
inline Permutation block_transposition(size_t i, size_t j) {
    std::vector<int> im(i + j);
    for (size_t k = 0; k < i; ++k) im[k] = int(j + k) + 1;
    for (size_t k = 0; k < j; ++k) im[i + k] = int(k) + 1;
    return Permutation(std::move(im));
}

/// The interleaving permutation in S_{2i} sending the first block to odd
/// slots and the second to even slots.
inline Permutation interleaving(size_t i) {
    std::vector<int> im(2 * i);
    for (size_t k = 0; k < i; ++k) im[k] = int(2 * k) + 1;
    for (size_t k = 0; k < i; ++k) im[i + k] = int(2 * k) + 2;
    return Permutation(std::move(im));
}

/// Canonical reduced expression produced by bubble-sorting the one-line
/// notation.  The returned indices are applied leftmost-first as elementary
/// operators, and the word length equals the inversion count.
inline std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> line = w.images();
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t k = 0; k + 1 < line.size(); ++k) {
            if (line[k] > line[k + 1]) {
                std::swap(line[k], line[k + 1]);
                word.push_back(int(k) + 1);
                moved = true;
            }
        }
    }
    return word;
}

/// All reduced expressions of w, found by peeling left descents.  Words are
/// in the same operator convention as reduced_word.
inline std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    if (w.is_identity()) return {{}};
    std::vector<std::vector<int>> out;
    size_t n = w.size();
    for (int i = 1; i + 1 <= int(n); ++i) {
        Permutation si = Permutation::transposition(n, i);
        Permutation rest = si * w;
        if (rest.inversions() < w.inversions()) {
            for (auto tail : all_reduced_words(rest)) {
                tail.push_back(i);
                out.push_back(std::move(tail));
            }
        }
    }
    return out;
}

/// All (i,j)-shuffles, enumerated by choosing the landing set of the first
/// block.  Exactly binomial(i+j, i) permutations.
inline std::vector<Permutation> enumerate_shuffles(size_t i, size_t j) {
    std::vector<Permutation> out;
    size_t n = i + j;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + long(i), true);
    do {
        std::vector<int> first, second;
        for (size_t v = 0; v < n; ++v)
            (mask[v] ? first : second).push_back(int(v) + 1);
        std::vector<int> im;
        im.reserve(n);
        im.insert(im.end(), first.begin(), first.end());
        im.insert(im.end(), second.begin(), second.end());
        out.push_back(Permutation(std::move(im)));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

} // namespace qshuffle
