#include "dgla/assoc.hpp"

#include <stdexcept>

namespace dgla {

NcPolynomial NcPolynomial::word(Word w, Rational coeff) {
    NcPolynomial p;
    p.add_term(w, coeff);
    return p;
}

void NcPolynomial::add_term(const Word& w, const Rational& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NcPolynomial NcPolynomial::truncated(int max_length) const {
    NcPolynomial out;
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) <= max_length)
            out.terms_.emplace(w, c);
    return out;
}

NcPolynomial NcPolynomial::operator-() const {
    NcPolynomial out;
    for (const auto& [w, c] : terms_)
        out.terms_.emplace(w, -c);
    return out;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

NcPolynomial concat_product(const NcPolynomial& a, const NcPolynomial& b) {
    NcPolynomial out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            out.add_term(u + v, cu * cv);
    return out;
}

NcPolynomial super_commutator(const NcPolynomial& a, const NcPolynomial& b,
                              const Alphabet& alphabet) {
    NcPolynomial out;
    for (const auto& [u, cu] : a.terms()) {
        bool u_odd = (alphabet.word_degree(u) & 1) != 0;
        for (const auto& [v, cv] : b.terms()) {
            bool v_odd = (alphabet.word_degree(v) & 1) != 0;
            Rational c = cu * cv;
            out.add_term(u + v, c);
            out.add_term(v + u, (u_odd && v_odd) ? c : -c);
        }
    }
    return out;
}

namespace {

NcPolynomial expand_monomial(const LieMonomial& m, const Alphabet& alphabet) {
    if (m.is_generator())
        return NcPolynomial::word(m.word());
    auto [l, r] = m.factors(alphabet);
    return super_commutator(expand_monomial(l, alphabet), expand_monomial(r, alphabet),
                            alphabet);
}

} // namespace

NcPolynomial assoc_expand(const LieElement& x) {
    const Alphabet& alphabet = x.context()->alphabet();
    NcPolynomial out;
    for (const auto& [m, c] : x.terms()) {
        NcPolynomial p = expand_monomial(m, alphabet);
        p *= c;
        out += p;
    }
    return out;
}

NcPolynomial assoc_expand(const Expr& expr, const Alphabet& alphabet) {
    switch (expr.kind()) {
    case Expr::Kind::Generator:
        return NcPolynomial::word(Word(1, static_cast<char>(alphabet.index_of(expr.name()))));
    case Expr::Kind::Bracket:
        return super_commutator(assoc_expand(expr.left(), alphabet),
                                assoc_expand(expr.right(), alphabet), alphabet);
    case Expr::Kind::Sum:
        return assoc_expand(expr.left(), alphabet) + assoc_expand(expr.right(), alphabet);
    case Expr::Kind::Scale: {
        NcPolynomial p = assoc_expand(expr.inner(), alphabet);
        p *= expr.coeff();
        return p;
    }
    case Expr::Kind::Zero:
        return NcPolynomial();
    }
    throw std::logic_error("unreachable expression kind");
}

} // namespace dgla
