#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "dgla/alphabet.hpp"

namespace dgla {

/// A word over an alphabet, stored as the sequence of generator indices.
/// std::string comparison is exactly the lexicographic order induced by the
/// alphabet's declaration order.
using Word = std::string;

/// True iff w is strictly smaller than every proper suffix of itself.
bool is_lyndon(std::string_view w);

/// Standard (Chen-Fox-Lyndon) factorization w = u v, where v is the longest
/// proper suffix of w that is Lyndon. Precondition: w Lyndon, |w| >= 2.
std::pair<Word, Word> standard_factorization(std::string_view w);

/// Normal-form basis monomial of the free graded Lie algebra: either the
/// standard bracketing of a Lyndon word, or the self-bracket [m,m] of an
/// odd-degree Lyndon monomial m (stored as the doubled word).
///
/// The word together with the alphabet determines the bracket tree, so two
/// monomials are equal iff their words agree.
class LieMonomial {
public:
    LieMonomial(Word word, const Alphabet& alphabet);

    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    int degree() const { return degree_; }
    bool odd() const { return (degree_ & 1) != 0; }

    bool is_generator() const { return word_.size() == 1; }
    bool is_square() const { return square_; }

    /// For squares [m,m], the word of m.
    Word root_word() const { return word_.substr(0, word_.size() / 2); }

    /// The two bracket factors: (m,m) for a square, otherwise the standard
    /// factorization of the Lyndon word. Precondition: length >= 2.
    std::pair<LieMonomial, LieMonomial> factors(const Alphabet& alphabet) const;

    /// Canonical order: (length, degree, word). Also the serialization order.
    friend bool operator<(const LieMonomial& a, const LieMonomial& b) {
        if (a.word_.size() != b.word_.size())
            return a.word_.size() < b.word_.size();
        if (a.degree_ != b.degree_)
            return a.degree_ < b.degree_;
        return a.word_ < b.word_;
    }
    friend bool operator==(const LieMonomial& a, const LieMonomial& b) {
        return a.word_ == b.word_;
    }
    friend bool operator!=(const LieMonomial& a, const LieMonomial& b) {
        return !(a == b);
    }

private:
    Word word_;
    int degree_;
    bool square_;
};

} // namespace dgla
