#pragma once

#include <map>
#include <optional>
#include <string_view>

#include "dgla/alphabet.hpp"
#include "dgla/expr.hpp"
#include "dgla/monomial.hpp"
#include "dgla/rational.hpp"

namespace dgla {

/// Finite formal sum of normal-form monomials with exact rational
/// coefficients, interpreted modulo brackets of length > max_length.
/// Invariants: no stored coefficient is zero; no stored monomial is longer
/// than the truncation length.
class LieElement {
public:
    explicit LieElement(ContextPtr ctx);

    static LieElement zero(ContextPtr ctx) { return LieElement(std::move(ctx)); }
    static LieElement monomial(ContextPtr ctx, const LieMonomial& m,
                               Rational coeff = Rational(1));

    const ContextPtr& context() const { return ctx_; }
    const std::map<LieMonomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Degree when homogeneous (zero is homogeneous of every degree).
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous(int degree) const;

    /// Shortest monomial length present; 0 for the zero element.
    int min_length() const;

    LieElement truncated(int max_length) const;
    LieElement part_of_length(int length) const;

    /// Adds c*m, dropping the term if it cancels or exceeds the truncation.
    void add_term(const LieMonomial& m, const Rational& coeff);

    LieElement operator-() const;
    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& c);

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
    friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }

    friend bool operator==(const LieElement& a, const LieElement& b);
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

private:
    ContextPtr ctx_;
    std::map<LieMonomial, Rational> terms_;
};

/// Throws context_error unless both elements share one truncation context.
void require_same_context(const LieElement& a, const LieElement& b);

/// The generator as an element; throws alphabet_error for unknown names.
LieElement generator_element(const ContextPtr& ctx, std::string_view name);

/// Normal form of a raw bracket expression. Monomials longer than the
/// truncation are dropped; normalizing a normal form is the identity.
LieElement normalize(const Expr& expr, const ContextPtr& ctx);

/// Graded Lie bracket, bilinear, result in normal form.
LieElement bracket(const LieElement& x, const LieElement& y);

/// (ad_v)^k(x); k = 0 gives x back.
LieElement ad_power(const LieElement& v, unsigned k, const LieElement& x);

} // namespace dgla
