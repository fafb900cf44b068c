// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every expected value is exact; there are no tolerances anywhere.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dgla/assoc.hpp"
#include "dgla/basis.hpp"
#include "dgla/bernoulli.hpp"
#include "dgla/derivation.hpp"
#include "dgla/element.hpp"
#include "dgla/flow.hpp"
#include "dgla/parse.hpp"
#include "dgla/print.hpp"
#include "util.hpp"

using namespace dgla;
using dgla::testing::all_bracketings;
using dgla::testing::nf;
using dgla::testing::random_tree;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool pass, const std::string& note = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << index << ". " << what;
    if (!pass && !note.empty())
        std::cout << "  [" << note << "]";
    std::cout << std::endl;
    if (!pass)
        ++failures;
}

// 1. d^2 e = 0 for every truncation 1..8.
void criterion_square_zero_e() {
    for (int n = 1; n <= 8; ++n) {
        ContextPtr ctx = interval_context(n);
        Derivation d = interval_differential(ctx);
        LieElement r = apply(d, d.value("e"));
        if (!r.is_zero()) {
            report(1, "d^2(e) = 0 for N in 1..8", false,
                   "N = " + std::to_string(n) + ": " + element_str(r));
            return;
        }
    }
    report(1, "d^2(e) = 0 for N in 1..8", true);
}

// 2. d^2 a = d^2 b = 0 for every truncation 1..8.
void criterion_square_zero_ab() {
    for (int n = 1; n <= 8; ++n) {
        ContextPtr ctx = interval_context(n);
        Derivation d = interval_differential(ctx);
        for (const char* g : {"a", "b"}) {
            LieElement r = apply(d, d.value(g));
            if (!r.is_zero()) {
                report(2, "d^2(a) = d^2(b) = 0 for N in 1..8", false,
                       std::string(g) + " at N = " + std::to_string(n));
                return;
            }
        }
    }
    report(2, "d^2(a) = d^2(b) = 0 for N in 1..8", true);
}

// 3. The flow generated by e moves a to b in unit time, every truncation 1..8.
void criterion_endpoint() {
    for (int n = 1; n <= 8; ++n) {
        ContextPtr ctx = interval_context(n);
        FlowProblem p(generator_element(ctx, "e"), generator_element(ctx, "a"),
                      interval_differential(ctx));
        LieElement u1 = flow_closed_form(p, Rational(1));
        if (u1 != generator_element(ctx, "b")) {
            report(3, "flow endpoint u(1) = b for N in 1..8", false,
                   "N = " + std::to_string(n) + ": u(1) = " + element_str(u1));
            return;
        }
    }
    report(3, "flow endpoint u(1) = b for N in 1..8", true);
}

// 4. Hand-summed low-length parts of de.
void criterion_de_parts() {
    ContextPtr ctx = interval_context(6);
    LieElement de = interval_differential(ctx).value("e");
    bool ok = de.part_of_length(1) == nf(ctx, "b - a") &&
              de.part_of_length(2) == nf(ctx, "1/2*[e,a] + 1/2*[e,b]") &&
              de.part_of_length(3) == nf(ctx, "1/12*[e,[e,b]] - 1/12*[e,[e,a]]");
    report(4, "de parts: b-a, 1/2[e,a]+1/2[e,b], 1/12[e,[e,b]]-1/12[e,[e,a]]", ok,
           ok ? "" : element_str(de.truncated(3)));
}

// 5. Bernoulli numbers through B_20.
void criterion_bernoulli() {
    BernoulliTable t = bernoulli_upto(20);
    bool ok = t.at(1) == Rational(-1, 2);
    for (unsigned m = 1; m <= 20 && ok; ++m) {
        Rational acc;
        for (unsigned k = 0; k <= m; ++k)
            acc += Rational::binomial(m + 1, k) * t.at(k);
        ok = acc.is_zero();
    }
    for (unsigned i = 3; i <= 19 && ok; i += 2)
        ok = t.at(i).is_zero();
    for (unsigned m = 0; m < 20 && ok; ++m) {
        Rational coeff;
        for (unsigned i = 0; i <= m; ++i)
            coeff += t.at(i) / Rational::factorial(i) / Rational::factorial(m - i + 1);
        ok = coeff == (m == 0 ? Rational(1) : Rational(0));
    }
    report(5, "Bernoulli table through B_20: recurrence, B_1 = -1/2, odd zeros, "
              "series product = 1 mod x^20", ok);
}

// 6. Normal form vs the associative envelope on 500+ random trees.
void criterion_oracle_agreement() {
    ContextPtr ctx = interval_context(6);
    const Alphabet& alpha = ctx->alphabet();
    std::mt19937 rng(20260808);
    std::uniform_int_distribution<int> leaves(1, 6);
    int disagreements = 0;

    for (int i = 0; i < 500; ++i) {
        Expr t = random_tree(rng, leaves(rng), alpha);
        if (assoc_expand(normalize(t, ctx)) != assoc_expand(t, alpha).truncated(6))
            ++disagreements;
    }
    for (int i = 0; i < 250; ++i) {
        Expr x = random_tree(rng, leaves(rng), alpha);
        Expr y = random_tree(rng, leaves(rng), alpha);
        bool same_nf = normalize(x, ctx) == normalize(y, ctx);
        bool same_exp =
            assoc_expand(x, alpha).truncated(6) == assoc_expand(y, alpha).truncated(6);
        if (same_nf != same_exp)
            ++disagreements;
    }
    report(6, "normal form sound and complete vs envelope oracle on 500 trees + 250 pairs",
           disagreements == 0, std::to_string(disagreements) + " disagreements");
}

// 7. Curvature and ODE residual along the flow at the sampled times.
void criterion_flow_checks() {
    ContextPtr ctx = interval_context(6);
    FlowProblem p(generator_element(ctx, "e"), generator_element(ctx, "a"),
                  interval_differential(ctx));
    bool ok = true;
    std::string note;
    for (const Rational& t :
         {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)}) {
        LieElement c = curvature_along_flow(p, t);
        LieElement r = flow_residual(p, t);
        if (!c.is_zero() || !r.is_zero()) {
            ok = false;
            note = "t = " + t.str();
            break;
        }
    }
    report(7, "curvature and ODE residual vanish along the flow at 5 times", ok, note);
}

// 8. Flatness preservation for 50+ random degree 0 generators.
void criterion_flatness_preserved() {
    ContextPtr ctx = interval_context(6);
    Derivation d = interval_differential(ctx);
    LieElement e = generator_element(ctx, "e");
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
        Rational c(num(rng), den(rng));
        for (const char* start : {"a", "b"}) {
            FlowProblem p(c * e, generator_element(ctx, start), d);
            if (!is_flat(d, flow_closed_form(p, Rational(1))))
                ++bad;
        }
    }
    report(8, "flowing a, b to t = 1 by 50 random degree 0 generators stays flat",
           bad == 0, std::to_string(bad) + " non-flat endpoints");
}

// 9. Negative controls: perturbing B_2 must break criteria 1 and 3 visibly.
void criterion_negative_controls() {
    ContextPtr ctx = interval_context(6);
    BernoulliTable bad = bernoulli_upto(5).with_value(2, Rational(1, 10));
    Derivation d = interval_differential(ctx, bad);

    LieElement square_residual = apply(d, d.value("e"));
    bool broke_square = !square_residual.is_zero() && square_residual.min_length() <= 4;

    FlowProblem p(generator_element(ctx, "e"), generator_element(ctx, "a"), d);
    LieElement diff = flow_closed_form(p, Rational(1)) - generator_element(ctx, "b");
    bool broke_endpoint = !diff.is_zero() && diff.min_length() <= 4;

    report(9, "perturbing B_2 to 1/10 breaks d^2(e) = 0 and the endpoint by length 4",
           broke_square && broke_endpoint);
}

// 10. Basis counts equal envelope ranks for every (length <= 5, degree).
void criterion_basis_ranks() {
    ContextPtr ctx = interval_context(6);
    const Alphabet& alpha = ctx->alphabet();
    bool ok = true;
    std::string note;
    for (int length = 1; length <= 5 && ok; ++length) {
        std::map<int, std::vector<NcPolynomial>> by_degree;
        for (const Expr& t : all_bracketings(length, alpha)) {
            NcPolynomial p = assoc_expand(t, alpha);
            if (p.is_zero())
                continue;
            by_degree[alpha.word_degree(p.terms().begin()->first)].push_back(std::move(p));
        }
        std::map<int, int> ranks;
        for (auto& [degree, rows] : by_degree)
            ranks[degree] = dgla::testing::rank(std::move(rows));
        for (int degree = -length; degree <= 0; ++degree) {
            int expected = ranks.count(degree) ? ranks[degree] : 0;
            int got = static_cast<int>(enumerate_basis(*ctx, length, degree).size());
            if (got != expected) {
                ok = false;
                note = "length " + std::to_string(length) + " degree " +
                       std::to_string(degree) + ": basis " + std::to_string(got) +
                       " vs rank " + std::to_string(expected);
                break;
            }
        }
    }
    report(10, "basis counts match brute-force envelope ranks for lengths <= 5", ok, note);
}

} // namespace

int main() {
    criterion_square_zero_e();
    criterion_square_zero_ab();
    criterion_endpoint();
    criterion_de_parts();
    criterion_bernoulli();
    criterion_oracle_agreement();
    criterion_flow_checks();
    criterion_flatness_preserved();
    criterion_negative_controls();
    criterion_basis_ranks();

    if (failures == 0)
        std::cout << "all 10 acceptance criteria passed" << std::endl;
    else
        std::cout << failures << " acceptance criteria FAILED" << std::endl;
    return failures;
}
