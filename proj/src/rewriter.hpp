#pragma once

#include <map>
#include <set>
#include <utility>

#include "dgla/element.hpp"

namespace dgla {

/// Bottom-up collection rewriter for the free graded Lie algebra: brackets of
/// normal-form monomials are reduced with the graded antisymmetry rule to
/// order factors and the graded Jacobi rule to re-associate toward standard
/// Lyndon bracketings; self-brackets [m,m] of odd monomials are terminal.
///
/// One instance memoizes monomial pair products, so callers performing many
/// brackets under one context should share an instance. Instances are cheap
/// and not thread-safe; the public free functions create one per call, which
/// keeps them pure.
class Rewriter {
public:
    explicit Rewriter(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    const ContextPtr& context() const { return ctx_; }

    LieElement bracket(const LieElement& x, const LieElement& y);
    LieElement bracket(const LieMonomial& p, const LieMonomial& q);
    LieElement bracket(const LieMonomial& m, const LieElement& x);

private:
    LieElement reduce(const LieMonomial& p, const LieMonomial& q);

    // (-1)^{|p||q|}
    static int koszul(const LieMonomial& p, const LieMonomial& q) {
        return (p.odd() && q.odd()) ? -1 : 1;
    }

    ContextPtr ctx_;
    std::map<std::pair<Word, Word>, LieElement> memo_;
    std::set<std::pair<Word, Word>> in_progress_;
};

} // namespace dgla
