#pragma once

#include <map>
#include <vector>

#include "dgla/derivation.hpp"
#include "dgla/element.hpp"
#include "dgla/rational.hpp"

namespace dgla {

/// Polynomial in the flow time t with exact rational coefficients.
class TimePolynomial {
public:
    TimePolynomial() = default;

    static TimePolynomial term(unsigned power, Rational coeff);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in t; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(unsigned power) const;

    Rational eval(const Rational& t) const;
    TimePolynomial derivative() const;

    void add_term(unsigned power, const Rational& coeff);
    TimePolynomial& operator+=(const TimePolynomial& o);
    TimePolynomial& operator*=(const Rational& c);

    friend bool operator==(const TimePolynomial& a, const TimePolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TimePolynomial& a, const TimePolynomial& b) {
        return !(a == b);
    }

private:
    void strip();
    std::vector<Rational> coeffs_; // coeffs_[k] * t^k, no trailing zeros
};

/// Element-valued polynomial in t: one exact time polynomial per monomial.
/// The flow solution u(t) is represented this way, so the ODE residual can be
/// formed by formal differentiation instead of numerical differencing.
class FlowCurve {
public:
    explicit FlowCurve(ContextPtr ctx);

    static FlowCurve constant(const LieElement& x);

    const ContextPtr& context() const { return ctx_; }
    const std::map<LieMonomial, TimePolynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LieMonomial& m, const TimePolynomial& poly);

    LieElement evaluate(const Rational& t) const;
    FlowCurve derivative() const;

    FlowCurve& operator+=(const FlowCurve& o);
    FlowCurve& operator-=(const FlowCurve& o);

    friend bool operator==(const FlowCurve& a, const FlowCurve& b);
    friend bool operator!=(const FlowCurve& a, const FlowCurve& b) { return !(a == b); }

private:
    ContextPtr ctx_;
    std::map<LieMonomial, TimePolynomial> terms_;
};

/// Gauge-flow problem du/dt = dv - ad_v(u), u(0) = u0, for a degree 0
/// generator v and a degree -1 initial value u0.
struct FlowProblem {
    FlowProblem(LieElement generator_v, LieElement initial_u0, Derivation differential);

    LieElement generator_v;
    LieElement initial_u0;
    Derivation differential;
};

/// e^{-t ad_v}(x) = sum_k ((-t)^k/k!) ad_v^k(x) as an exact curve; the series
/// is finite since ad_v raises word length.
FlowCurve exp_ad_curve(const LieElement& v, const LieElement& x);

/// (e^{-t ad_v} - 1)/(-ad_v) applied to x: sum_{n>=1} (t^n/n!)(-ad_v)^{n-1}(x).
FlowCurve phi_curve(const LieElement& v, const LieElement& x);

/// Closed-form flow solution u(t) = e^{-t ad_v} u0 + phi(v,t, dv).
FlowCurve flow_curve(const FlowProblem& p);

/// du/dt - (dv - ad_v u), formed by formal differentiation; identically zero
/// when the closed form solves the flow equation.
FlowCurve flow_residual_curve(const FlowProblem& p);

/// [v, u(t)] for a t-independent v.
FlowCurve ad_curve(const LieElement& v, const FlowCurve& u);

LieElement exp_ad(const LieElement& v, const Rational& t, const LieElement& x);
LieElement phi_series(const LieElement& v, const Rational& t, const LieElement& x);
LieElement flow_closed_form(const FlowProblem& p, const Rational& t);
LieElement flow_residual(const FlowProblem& p, const Rational& t);
LieElement curvature_along_flow(const FlowProblem& p, const Rational& t);

} // namespace dgla
