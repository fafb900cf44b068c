#include "dgla/derivation.hpp"

#include "dgla/errors.hpp"
#include "rewriter.hpp"

namespace dgla {

Derivation::Derivation(ContextPtr ctx, int degree_shift,
                       const std::map<std::string, LieElement>& generator_values)
    : ctx_(std::move(ctx)), shift_(degree_shift) {
    const Alphabet& alpha = ctx_->alphabet();
    values_.assign(alpha.size(), LieElement(ctx_));
    defined_.assign(alpha.size(), false);
    for (const auto& [name, value] : generator_values) {
        int i = alpha.index_of(name);
        if (*value.context() != *ctx_)
            throw context_error("derivation value in a different context");
        if (!value.is_homogeneous(alpha.degree(i) + shift_))
            throw definition_error("value of '" + name + "' is not homogeneous of degree " +
                                   std::to_string(alpha.degree(i) + shift_));
        values_[i] = value;
        defined_[i] = true;
    }
}

bool Derivation::defines(int generator_index) const {
    return generator_index >= 0 && generator_index < static_cast<int>(defined_.size()) &&
           defined_[generator_index];
}

const LieElement& Derivation::value(int generator_index) const {
    if (!defines(generator_index))
        throw definition_error("derivation undefined on generator '" +
                               ctx_->alphabet().at(generator_index).name + "'");
    return values_[generator_index];
}

const LieElement& Derivation::value(std::string_view generator_name) const {
    return value(ctx_->alphabet().index_of(generator_name));
}

namespace {

// Recursive Leibniz extension over the bracket factors of a normal-form
// monomial; memoized per top-level apply call.
LieElement derive_monomial(const Derivation& d, const LieMonomial& m, Rewriter& rw,
                           std::map<Word, LieElement>& memo) {
    if (auto it = memo.find(m.word()); it != memo.end())
        return it->second;
    const ContextPtr& ctx = d.context();
    LieElement out(ctx);
    if (m.is_generator()) {
        out = d.value(static_cast<unsigned char>(m.word()[0]));
    } else {
        auto [p, q] = m.factors(ctx->alphabet());
        LieElement dp = derive_monomial(d, p, rw, memo);
        LieElement dq = derive_monomial(d, q, rw, memo);
        LieElement qe = LieElement::monomial(ctx, q);
        LieElement pe = LieElement::monomial(ctx, p);
        int sign = ((d.degree_shift() & 1) != 0 && p.odd()) ? -1 : 1;
        out = rw.bracket(dp, qe);
        LieElement second = rw.bracket(pe, dq);
        second *= Rational(sign);
        out += second;
    }
    memo.emplace(m.word(), out);
    return out;
}

} // namespace

LieElement apply(const Derivation& d, const LieElement& x) {
    if (*d.context() != *x.context())
        throw context_error("derivation applied across contexts");
    Rewriter rw(d.context());
    std::map<Word, LieElement> memo;
    LieElement out(d.context());
    for (const auto& [m, c] : x.terms()) {
        LieElement dm = derive_monomial(d, m, rw, memo);
        dm *= c;
        out += dm;
    }
    return out;
}

Derivation interval_differential(const ContextPtr& ctx) {
    return interval_differential(ctx, bernoulli_upto(ctx->max_length() - 1));
}

Derivation interval_differential(const ContextPtr& ctx, const BernoulliTable& table) {
    const Alphabet& alpha = ctx->alphabet();
    for (const char* name : {"a", "b", "e"})
        if (!alpha.contains(name))
            throw alphabet_error("interval differential needs generators a, b, e");
    if (alpha.degree(alpha.index_of("a")) != -1 || alpha.degree(alpha.index_of("b")) != -1 ||
        alpha.degree(alpha.index_of("e")) != 0)
        throw alphabet_error("interval differential needs degrees a:-1, b:-1, e:0");
    int n = ctx->max_length();
    if (table.size() < static_cast<std::size_t>(n))
        throw domain_error("bernoulli table shorter than the truncation length");

    Rewriter rw(ctx);
    LieElement a = generator_element(ctx, "a");
    LieElement b = generator_element(ctx, "b");
    LieElement e = generator_element(ctx, "e");

    // de = ad_e(b) + sum_{i=0}^{n-1} (B_i/i!) ad_e^i(b-a); terms with i >= n
    // exceed the truncation length.
    LieElement de = rw.bracket(e, b);
    LieElement series_arg = b - a;
    Rational factorial(1);
    for (int i = 0; i < n && !series_arg.is_zero(); ++i) {
        if (i > 0)
            factorial *= Rational(i);
        de += (table.at(i) / factorial) * series_arg;
        series_arg = rw.bracket(e, series_arg);
    }

    std::map<std::string, LieElement> values;
    values.emplace("a", Rational(-1, 2) * rw.bracket(a, a));
    values.emplace("b", Rational(-1, 2) * rw.bracket(b, b));
    values.emplace("e", de);
    return Derivation(ctx, -1, values);
}

LieElement curvature(const Derivation& d, const LieElement& x) {
    if (!x.is_homogeneous(-1))
        throw domain_error("curvature requires a homogeneous element of degree -1");
    return apply(d, x) + Rational(1, 2) * bracket(x, x);
}

bool is_flat(const Derivation& d, const LieElement& x) {
    return curvature(d, x).is_zero();
}

std::vector<SquareZeroEntry> check_square_zero(const Derivation& d) {
    const Alphabet& alpha = d.context()->alphabet();
    std::vector<SquareZeroEntry> out;
    for (int i = 0; i < alpha.size(); ++i) {
        LieElement residual = apply(d, d.value(i));
        out.push_back({alpha.at(i).name, std::move(residual)});
    }
    return out;
}

} // namespace dgla
