#include "dgla/cli.hpp"

#include <algorithm>
#include <sstream>

#include "dgla/basis.hpp"
#include "dgla/bernoulli.hpp"
#include "dgla/derivation.hpp"
#include "dgla/errors.hpp"
#include "dgla/flow.hpp"
#include "dgla/parse.hpp"
#include "dgla/print.hpp"
#include "dgla/verify.hpp"
#include "rewriter.hpp"

namespace dgla {

namespace {

ContextPtr context_of(const CliConfig& cfg) {
    return make_context(cfg.alphabet, cfg.max_length);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Derivation differential_of(const CliConfig& cfg, const ContextPtr& ctx) {
    unsigned table_size = static_cast<unsigned>(cfg.max_length);
    for (const auto& [i, v] : cfg.bernoulli_overrides)
        table_size = std::max(table_size, i + 1);
    BernoulliTable table = bernoulli_upto(table_size - 1);
    for (const auto& [i, v] : cfg.bernoulli_overrides)
        table = table.with_value(i, v);
    return interval_differential(ctx, table);
}

CmdResult element_result(const CliConfig& cfg, const LieElement& x) {
    if (cfg.format == CliConfig::Format::json)
        return {0, dump(element_json(x))};
    return {0, element_str(x) + "\n"};
}

} // namespace

CmdResult cmd_normalize(const CliConfig& cfg, std::string_view expr_text) {
    ContextPtr ctx = context_of(cfg);
    return element_result(cfg, normalize(parse_expr(expr_text), ctx));
}

CmdResult cmd_diff(const CliConfig& cfg, std::string_view expr_text) {
    ContextPtr ctx = context_of(cfg);
    Derivation d = differential_of(cfg, ctx);
    return element_result(cfg, apply(d, normalize(parse_expr(expr_text), ctx)));
}

CmdResult cmd_verify(const CliConfig& cfg) {
    VerifyOptions options;
    options.max_length = cfg.max_length;
    options.bernoulli_overrides = cfg.bernoulli_overrides;
    std::vector<CheckResult> results = run_verification(options);
    bool ok = all_passed(results);

    std::ostringstream os;
    if (cfg.format == CliConfig::Format::json) {
        Json list = Json::array();
        for (const auto& r : results) {
            Json rec;
            rec["name"] = r.name;
            rec["pass"] = r.pass;
            if (!r.detail.empty())
                rec["detail"] = r.detail;
            if (r.residual)
                rec["residual"] = element_json(*r.residual);
            list.push_back(std::move(rec));
        }
        Json j;
        j["max_length"] = cfg.max_length;
        j["checks"] = std::move(list);
        j["all_passed"] = ok;
        os << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            os << (r.pass ? "ok   " : "FAIL ") << r.name;
            if (!r.detail.empty())
                os << "  [" << r.detail << "]";
            os << "\n";
        }
        os << (ok ? "all checks passed" : "some checks FAILED") << " (max length "
           << cfg.max_length << ")\n";
    }
    return {ok ? 0 : 1, os.str()};
}

CmdResult cmd_flow(const CliConfig& cfg, std::string_view v_text, std::string_view u0_text,
                   const Rational& t) {
    ContextPtr ctx = context_of(cfg);
    Derivation d = differential_of(cfg, ctx);
    LieElement v = normalize(parse_expr(v_text), ctx);
    LieElement u0 = normalize(parse_expr(u0_text), ctx);
    FlowProblem p(std::move(v), std::move(u0), d);
    LieElement u = flow_closed_form(p, t);
    LieElement residual = flow_residual(p, t);
    LieElement curv = curvature(d, u);

    if (cfg.format == CliConfig::Format::json) {
        Json j;
        j["t"] = t.str();
        j["u"] = element_json(u);
        j["residual"] = element_json(residual);
        j["curvature"] = element_json(curv);
        return {0, dump(j)};
    }
    std::ostringstream os;
    os << "u(" << t.str() << ") = " << element_str(u) << "\n";
    os << "residual = " << element_str(residual) << "\n";
    os << "curvature = " << element_str(curv) << "\n";
    return {0, os.str()};
}

CmdResult cmd_basis(const CliConfig& cfg, int length, int degree) {
    ContextPtr ctx = context_of(cfg);
    std::vector<LieMonomial> basis = enumerate_basis(*ctx, length, degree);
    if (cfg.format == CliConfig::Format::json) {
        Json list = Json::array();
        for (const auto& m : basis)
            list.push_back(monomial_json(m, cfg.alphabet));
        return {0, dump(list)};
    }
    std::ostringstream os;
    for (const auto& m : basis)
        os << monomial_str(m, cfg.alphabet) << "\n";
    return {0, os.str()};
}

CmdResult cmd_bernoulli(const CliConfig& cfg, unsigned upto) {
    BernoulliTable table = bernoulli_upto(upto);
    if (cfg.format == CliConfig::Format::json) {
        Json list = Json::array();
        for (unsigned i = 0; i < table.size(); ++i) {
            Json rec;
            rec["i"] = i;
            rec["value"] = table.at(i).str();
            list.push_back(std::move(rec));
        }
        return {0, dump(list)};
    }
    std::ostringstream os;
    for (unsigned i = 0; i < table.size(); ++i)
        os << i << " " << table.at(i).str() << "\n";
    return {0, os.str()};
}

CmdResult cmd_export(const CliConfig& cfg) {
    ContextPtr ctx = context_of(cfg);
    Derivation d = differential_of(cfg, ctx);

    std::vector<LieMonomial> monomials;
    for (int length = 1; length <= cfg.max_length; ++length)
        for (const auto& m : enumerate_basis(*ctx, length))
            monomials.push_back(m);

    // Bracket table entries ordered by combined length, so exports at larger
    // truncations extend exports at smaller ones.
    struct Pair {
        const LieMonomial* left;
        const LieMonomial* right;
    };
    std::vector<Pair> pairs;
    for (const auto& p : monomials)
        for (const auto& q : monomials) {
            if (q < p || p.length() + q.length() > cfg.max_length)
                continue;
            pairs.push_back({&p, &q});
        }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        int lx = x.left->length() + x.right->length();
        int ly = y.left->length() + y.right->length();
        if (lx != ly)
            return lx < ly;
        if (*x.left != *y.left)
            return *x.left < *y.left;
        return *x.right < *y.right;
    });

    Rewriter rw(ctx);
    if (cfg.format == CliConfig::Format::json) {
        Json j;
        j["max_length"] = cfg.max_length;
        Json alpha = Json::array();
        for (const auto& g : cfg.alphabet.generators()) {
            Json rec;
            rec["name"] = g.name;
            rec["degree"] = g.degree;
            alpha.push_back(std::move(rec));
        }
        j["alphabet"] = std::move(alpha);
        Json brackets = Json::array();
        for (const auto& pr : pairs) {
            Json rec;
            rec["left"] = monomial_json(*pr.left, cfg.alphabet);
            rec["right"] = monomial_json(*pr.right, cfg.alphabet);
            rec["bracket"] = element_json(rw.bracket(*pr.left, *pr.right));
            brackets.push_back(std::move(rec));
        }
        j["brackets"] = std::move(brackets);
        Json differential = Json::array();
        for (const auto& m : monomials) {
            Json rec;
            rec["monomial"] = monomial_json(m, cfg.alphabet);
            rec["value"] = element_json(apply(d, LieElement::monomial(ctx, m)));
            differential.push_back(std::move(rec));
        }
        j["differential"] = std::move(differential);
        return {0, dump(j)};
    }

    std::ostringstream os;
    for (const auto& pr : pairs)
        os << "[" << monomial_str(*pr.left, cfg.alphabet) << ", "
           << monomial_str(*pr.right, cfg.alphabet)
           << "] = " << element_str(rw.bracket(*pr.left, *pr.right)) << "\n";
    for (const auto& m : monomials)
        os << "d(" << monomial_str(m, cfg.alphabet)
           << ") = " << element_str(apply(d, LieElement::monomial(ctx, m))) << "\n";
    return {0, os.str()};
}

} // namespace dgla
