#pragma once

#include <map>
#include <string>

#include "dgla/alphabet.hpp"
#include "dgla/element.hpp"
#include "dgla/expr.hpp"
#include "dgla/monomial.hpp"
#include "dgla/rational.hpp"

namespace dgla {

/// Noncommutative polynomial: exact-rational combination of generator words
/// in the free associative algebra. Used as the equality oracle for the free
/// Lie algebra, which embeds injectively over the rationals.
class NcPolynomial {
public:
    NcPolynomial() = default;

    static NcPolynomial word(Word w, Rational coeff = Rational(1));

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Rational& coeff);

    NcPolynomial truncated(int max_length) const;

    NcPolynomial operator-() const;
    NcPolynomial& operator+=(const NcPolynomial& o);
    NcPolynomial& operator-=(const NcPolynomial& o);
    NcPolynomial& operator*=(const Rational& c);

    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(const Rational& c, NcPolynomial a) { return a *= c; }

    friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const NcPolynomial& a, const NcPolynomial& b) {
        return !(a == b);
    }

private:
    std::map<Word, Rational> terms_;
};

/// Word-concatenation product.
NcPolynomial concat_product(const NcPolynomial& a, const NcPolynomial& b);

/// Signed commutator a*b - (-1)^{|a||b|} b*a, applied wordwise (each word is
/// homogeneous, so this is the bilinear extension).
NcPolynomial super_commutator(const NcPolynomial& a, const NcPolynomial& b,
                              const Alphabet& alphabet);

/// Expansion of a normal-form element in the associative envelope.
NcPolynomial assoc_expand(const LieElement& x);

/// Expansion of a raw bracket expression, leaf-wise, without normalizing.
/// This is the oracle path: it never touches the rewriter.
NcPolynomial assoc_expand(const Expr& expr, const Alphabet& alphabet);

} // namespace dgla
