#include "dgla/element.hpp"

#include "dgla/errors.hpp"
#include "rewriter.hpp"

namespace dgla {

LieElement::LieElement(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_)
        throw context_error("element without a truncation context");
}

LieElement LieElement::monomial(ContextPtr ctx, const LieMonomial& m, Rational coeff) {
    LieElement x(std::move(ctx));
    x.add_term(m, coeff);
    return x;
}

std::optional<int> LieElement::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        if (d && *d != m.degree())
            return std::nullopt;
        d = m.degree();
    }
    return d;
}

bool LieElement::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != degree)
            return false;
    return true;
}

int LieElement::min_length() const {
    return terms_.empty() ? 0 : terms_.begin()->first.length();
}

LieElement LieElement::truncated(int max_length) const {
    LieElement out(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.length() <= max_length)
            out.terms_.emplace(m, c);
    return out;
}

LieElement LieElement::part_of_length(int length) const {
    LieElement out(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.length() == length)
            out.terms_.emplace(m, c);
    return out;
}

void LieElement::add_term(const LieMonomial& m, const Rational& coeff) {
    if (coeff.is_zero() || m.length() > ctx_->max_length())
        return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LieElement LieElement::operator-() const {
    LieElement out(ctx_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    require_same_context(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    require_same_context(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

bool operator==(const LieElement& a, const LieElement& b) {
    return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
}

void require_same_context(const LieElement& a, const LieElement& b) {
    if (*a.context() != *b.context())
        throw context_error("elements from different truncation contexts");
}

LieElement generator_element(const ContextPtr& ctx, std::string_view name) {
    int index = ctx->alphabet().index_of(name);
    LieMonomial m(Word(1, static_cast<char>(index)), ctx->alphabet());
    return LieElement::monomial(ctx, m);
}

namespace {

LieElement normalize_impl(const Expr& expr, const ContextPtr& ctx, Rewriter& rw) {
    switch (expr.kind()) {
    case Expr::Kind::Generator:
        return generator_element(ctx, expr.name());
    case Expr::Kind::Bracket:
        return rw.bracket(normalize_impl(expr.left(), ctx, rw),
                          normalize_impl(expr.right(), ctx, rw));
    case Expr::Kind::Sum:
        return normalize_impl(expr.left(), ctx, rw) + normalize_impl(expr.right(), ctx, rw);
    case Expr::Kind::Scale:
        return expr.coeff() * normalize_impl(expr.inner(), ctx, rw);
    case Expr::Kind::Zero:
        return LieElement(ctx);
    }
    throw std::logic_error("unreachable expression kind");
}

} // namespace

LieElement normalize(const Expr& expr, const ContextPtr& ctx) {
    Rewriter rw(ctx);
    return normalize_impl(expr, ctx, rw);
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    require_same_context(x, y);
    Rewriter rw(x.context());
    return rw.bracket(x, y);
}

LieElement ad_power(const LieElement& v, unsigned k, const LieElement& x) {
    require_same_context(v, x);
    Rewriter rw(v.context());
    LieElement out = x;
    for (unsigned i = 0; i < k && !out.is_zero(); ++i)
        out = rw.bracket(v, out);
    return out;
}

} // namespace dgla
