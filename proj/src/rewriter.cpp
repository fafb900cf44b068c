#include "rewriter.hpp"

#include <stdexcept>

namespace dgla {

LieElement Rewriter::bracket(const LieElement& x, const LieElement& y) {
    require_same_context(x, y);
    LieElement acc(ctx_);
    for (const auto& [p, cp] : x.terms()) {
        for (const auto& [q, cq] : y.terms()) {
            if (p.length() + q.length() > ctx_->max_length())
                continue;
            LieElement term = bracket(p, q);
            term *= cp * cq;
            acc += term;
        }
    }
    return acc;
}

LieElement Rewriter::bracket(const LieMonomial& m, const LieElement& x) {
    LieElement acc(ctx_);
    for (const auto& [q, c] : x.terms()) {
        LieElement term = bracket(m, q);
        term *= c;
        acc += term;
    }
    return acc;
}

LieElement Rewriter::bracket(const LieMonomial& p, const LieMonomial& q) {
    if (p.length() + q.length() > ctx_->max_length())
        return LieElement(ctx_);
    auto key = std::make_pair(p.word(), q.word());
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    if (!in_progress_.insert(key).second)
        throw std::logic_error("bracket rewriting cycle"); // collection must terminate
    LieElement result = reduce(p, q);
    in_progress_.erase(key);
    memo_.emplace(std::move(key), result);
    return result;
}

LieElement Rewriter::reduce(const LieMonomial& p, const LieMonomial& q) {
    const Alphabet& alpha = ctx_->alphabet();
    LieElement out(ctx_);

    // [p,p] is a basis square for odd p and vanishes for even p.
    if (p == q) {
        if (p.odd())
            out.add_term(LieMonomial(p.word() + p.word(), alpha), Rational(1));
        return out;
    }

    // Squares decompose from the left: [[w,w],q] = 2[w,[w,q]] by the graded
    // Jacobi rule with both slots equal; [[w,w],w] = 0 over the rationals.
    if (p.is_square()) {
        LieMonomial w(p.root_word(), alpha);
        if (q.word() == w.word())
            return out;
        LieElement inner = bracket(w, q);
        return Rational(2) * bracket(w, inner);
    }
    if (q.is_square()) {
        LieMonomial w(q.root_word(), alpha);
        if (p.word() == w.word())
            return out;
        // koszul(p, q) = +1: squares have even degree.
        return -bracket(q, p);
    }

    // Graded antisymmetry orders the factors by word.
    if (q.word() < p.word()) {
        LieElement flipped = bracket(q, p);
        return Rational(-koszul(p, q)) * flipped;
    }

    // p < q, both standard Lyndon bracketings. [p,q] is itself standard iff
    // p is a letter or the right factor of p is >= q.
    if (p.is_generator() || standard_factorization(p.word()).second >= q.word()) {
        LieMonomial m(p.word() + q.word(), alpha);
        auto [l, r] = m.factors(alpha);
        if (l.word() != p.word() || r.word() != q.word())
            throw std::logic_error("standard bracketing mismatch");
        out.add_term(m, Rational(1));
        return out;
    }

    // Graded Jacobi: [[p1,p2],q] = [p1,[p2,q]] - (-1)^{|p1||p2|}[p2,[p1,q]].
    auto [p1, p2] = p.factors(alpha);
    LieElement t1 = bracket(p1, bracket(p2, q));
    LieElement t2 = bracket(p2, bracket(p1, q));
    t2 *= Rational(koszul(p1, p2));
    return t1 - t2;
}

} // namespace dgla
