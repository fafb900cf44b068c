#include "dgla/verify.hpp"

#include <algorithm>

#include "dgla/bernoulli.hpp"
#include "dgla/derivation.hpp"
#include "dgla/flow.hpp"
#include "dgla/print.hpp"

namespace dgla {

namespace {

const Rational kSampleTimes[] = {Rational(0), Rational(1, 3), Rational(1, 2),
                                 Rational(2, 3), Rational(1)};

void check_element_zero(std::vector<CheckResult>& out, const std::string& name,
                        const LieElement& residual) {
    CheckResult r{name, residual.is_zero(), "", std::nullopt};
    if (!r.pass) {
        r.detail = "residual = " + element_str(residual);
        r.residual = residual;
    }
    out.push_back(std::move(r));
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    ContextPtr ctx = interval_context(options.max_length);

    unsigned table_size = static_cast<unsigned>(options.max_length);
    for (const auto& [i, v] : options.bernoulli_overrides)
        table_size = std::max(table_size, i + 1);
    BernoulliTable table = bernoulli_upto(table_size - 1);
    for (const auto& [i, v] : options.bernoulli_overrides)
        table = table.with_value(i, v);

    Derivation d = interval_differential(ctx, table);
    LieElement a = generator_element(ctx, "a");
    LieElement b = generator_element(ctx, "b");
    LieElement e = generator_element(ctx, "e");

    std::vector<CheckResult> out;

    for (const auto& entry : check_square_zero(d))
        check_element_zero(out, "d^2(" + entry.generator + ") = 0", entry.residual);

    FlowProblem p(e, a, d);
    LieElement u1 = flow_closed_form(p, Rational(1));
    CheckResult endpoint{"flow endpoint u(1) = b", u1 == b, "", std::nullopt};
    if (!endpoint.pass) {
        endpoint.detail = "u(1) - b = " + element_str(u1 - b);
        endpoint.residual = u1 - b;
    }
    out.push_back(std::move(endpoint));

    for (const Rational& t : kSampleTimes)
        check_element_zero(out, "flow residual at t = " + t.str(), flow_residual(p, t));

    for (const Rational& t : kSampleTimes)
        check_element_zero(out, "curvature along flow at t = " + t.str(),
                           curvature_along_flow(p, t));

    // Flatness preservation: flow a and b to t = 1 by a spread of degree 0
    // generators (all rational multiples of e in this alphabet).
    const Rational scales[] = {Rational(1),    Rational(-1),   Rational(1, 2),
                               Rational(-2, 3), Rational(3),   Rational(5, 7),
                               Rational(-7, 2), Rational(2),   Rational(1, 3),
                               Rational(-1, 5)};
    CheckResult preserved{"flow preserves flatness", true, "", std::nullopt};
    for (const Rational& c : scales) {
        for (const LieElement* u0 : {&a, &b}) {
            FlowProblem q(c * e, *u0, d);
            LieElement flowed = flow_closed_form(q, Rational(1));
            if (!is_flat(d, flowed)) {
                preserved.pass = false;
                preserved.detail = "not flat after flowing by " + c.str() + "*e from " +
                                   element_str(*u0);
                preserved.residual = curvature(d, flowed);
            }
        }
    }
    out.push_back(std::move(preserved));

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace dgla
