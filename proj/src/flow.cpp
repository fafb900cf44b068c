#include "dgla/flow.hpp"

#include "dgla/errors.hpp"
#include "rewriter.hpp"

namespace dgla {

TimePolynomial TimePolynomial::term(unsigned power, Rational coeff) {
    TimePolynomial p;
    p.add_term(power, coeff);
    return p;
}

Rational TimePolynomial::coeff(unsigned power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational TimePolynomial::eval(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

TimePolynomial TimePolynomial::derivative() const {
    TimePolynomial out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out.add_term(static_cast<unsigned>(k - 1),
                     Rational(static_cast<long>(k)) * coeffs_[k]);
    return out;
}

void TimePolynomial::add_term(unsigned power, const Rational& coeff) {
    if (coeff.is_zero())
        return;
    if (coeffs_.size() <= power)
        coeffs_.resize(power + 1);
    coeffs_[power] += coeff;
    strip();
}

TimePolynomial& TimePolynomial::operator+=(const TimePolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    strip();
    return *this;
}

TimePolynomial& TimePolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

void TimePolynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

FlowCurve::FlowCurve(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_)
        throw context_error("flow curve without a truncation context");
}

FlowCurve FlowCurve::constant(const LieElement& x) {
    FlowCurve c(x.context());
    for (const auto& [m, coeff] : x.terms())
        c.add_term(m, TimePolynomial::term(0, coeff));
    return c;
}

void FlowCurve::add_term(const LieMonomial& m, const TimePolynomial& poly) {
    if (poly.is_zero() || m.length() > ctx_->max_length())
        return;
    auto [it, inserted] = terms_.emplace(m, poly);
    if (!inserted) {
        it->second += poly;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LieElement FlowCurve::evaluate(const Rational& t) const {
    LieElement out(ctx_);
    for (const auto& [m, poly] : terms_)
        out.add_term(m, poly.eval(t));
    return out;
}

FlowCurve FlowCurve::derivative() const {
    FlowCurve out(ctx_);
    for (const auto& [m, poly] : terms_)
        out.add_term(m, poly.derivative());
    return out;
}

FlowCurve& FlowCurve::operator+=(const FlowCurve& o) {
    if (*ctx_ != *o.ctx_)
        throw context_error("flow curves from different truncation contexts");
    for (const auto& [m, poly] : o.terms_)
        add_term(m, poly);
    return *this;
}

FlowCurve& FlowCurve::operator-=(const FlowCurve& o) {
    if (*ctx_ != *o.ctx_)
        throw context_error("flow curves from different truncation contexts");
    for (const auto& [m, poly] : o.terms_) {
        TimePolynomial neg = poly;
        neg *= Rational(-1);
        add_term(m, neg);
    }
    return *this;
}

bool operator==(const FlowCurve& a, const FlowCurve& b) {
    return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
}

namespace {

void require_flow_generator(const LieElement& v) {
    if (!v.is_homogeneous(0))
        throw domain_error("flow generator must be homogeneous of degree 0");
}

FlowCurve exp_ad_curve_impl(const LieElement& v, const LieElement& x, Rewriter& rw) {
    FlowCurve out(x.context());
    LieElement power = x; // ad_v^k(x)
    Rational factor(1);   // (-1)^k / k!
    int n = x.context()->max_length();
    for (int k = 0; !power.is_zero() && k <= n; ++k) {
        if (k > 0)
            factor *= Rational(-1, k);
        for (const auto& [m, c] : power.terms())
            out.add_term(m, TimePolynomial::term(static_cast<unsigned>(k), factor * c));
        power = rw.bracket(v, power);
    }
    return out;
}

FlowCurve phi_curve_impl(const LieElement& v, const LieElement& x, Rewriter& rw) {
    FlowCurve out(x.context());
    LieElement power = x; // (-ad_v)^{n-1}(x)
    Rational factor(1);   // 1 / n!
    int n_max = x.context()->max_length() + 1;
    for (int n = 1; !power.is_zero() && n <= n_max; ++n) {
        factor /= Rational(n);
        for (const auto& [m, c] : power.terms())
            out.add_term(m, TimePolynomial::term(static_cast<unsigned>(n), factor * c));
        power = -rw.bracket(v, power);
    }
    return out;
}

FlowCurve ad_applied(const LieElement& v, const FlowCurve& u, Rewriter& rw) {
    FlowCurve out(u.context());
    for (const auto& [m, poly] : u.terms()) {
        LieElement br = rw.bracket(v, LieElement::monomial(u.context(), m));
        for (const auto& [bm, bc] : br.terms()) {
            TimePolynomial scaled = poly;
            scaled *= bc;
            out.add_term(bm, scaled);
        }
    }
    return out;
}

FlowCurve flow_curve_impl(const FlowProblem& p, Rewriter& rw) {
    FlowCurve u = exp_ad_curve_impl(p.generator_v, p.initial_u0, rw);
    u += phi_curve_impl(p.generator_v, apply(p.differential, p.generator_v), rw);
    return u;
}

} // namespace

FlowProblem::FlowProblem(LieElement v, LieElement u0, Derivation d)
    : generator_v(std::move(v)), initial_u0(std::move(u0)), differential(std::move(d)) {
    require_same_context(generator_v, initial_u0);
    if (*generator_v.context() != *differential.context())
        throw context_error("flow problem parts from different truncation contexts");
    require_flow_generator(generator_v);
    if (!initial_u0.is_homogeneous(-1))
        throw domain_error("flow initial value must be homogeneous of degree -1");
}

FlowCurve exp_ad_curve(const LieElement& v, const LieElement& x) {
    require_same_context(v, x);
    require_flow_generator(v);
    Rewriter rw(v.context());
    return exp_ad_curve_impl(v, x, rw);
}

FlowCurve phi_curve(const LieElement& v, const LieElement& x) {
    require_same_context(v, x);
    require_flow_generator(v);
    Rewriter rw(v.context());
    return phi_curve_impl(v, x, rw);
}

FlowCurve flow_curve(const FlowProblem& p) {
    Rewriter rw(p.generator_v.context());
    return flow_curve_impl(p, rw);
}

FlowCurve flow_residual_curve(const FlowProblem& p) {
    Rewriter rw(p.generator_v.context());
    FlowCurve u = flow_curve_impl(p, rw);
    FlowCurve residual = u.derivative();
    residual -= FlowCurve::constant(apply(p.differential, p.generator_v));
    residual += ad_applied(p.generator_v, u, rw);
    return residual;
}

FlowCurve ad_curve(const LieElement& v, const FlowCurve& u) {
    if (*v.context() != *u.context())
        throw context_error("flow curves from different truncation contexts");
    Rewriter rw(v.context());
    return ad_applied(v, u, rw);
}

LieElement exp_ad(const LieElement& v, const Rational& t, const LieElement& x) {
    return exp_ad_curve(v, x).evaluate(t);
}

LieElement phi_series(const LieElement& v, const Rational& t, const LieElement& x) {
    return phi_curve(v, x).evaluate(t);
}

LieElement flow_closed_form(const FlowProblem& p, const Rational& t) {
    return flow_curve(p).evaluate(t);
}

LieElement flow_residual(const FlowProblem& p, const Rational& t) {
    return flow_residual_curve(p).evaluate(t);
}

LieElement curvature_along_flow(const FlowProblem& p, const Rational& t) {
    return curvature(p.differential, flow_closed_form(p, t));
}

} // namespace dgla
