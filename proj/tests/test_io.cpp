#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <tuple>

#include "dgla/cli.hpp"
#include "dgla/errors.hpp"
#include "dgla/print.hpp"
#include "util.hpp"

using namespace dgla;
using dgla::testing::nf;
using dgla::testing::random_combination;

namespace {

struct RunResult {
    int status;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DGLA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

} // namespace

TEST_CASE("parser accepts the grammar and reports positions") {
    ContextPtr ctx = interval_context(6);

    CHECK(nf(ctx, " 1/2 * [ a , [ b , e ] ] ") == Rational(1, 2) * nf(ctx, "[a,[b,e]]"));
    CHECK(nf(ctx, "(a)") == generator_element(ctx, "a"));
    CHECK(nf(ctx, "0").is_zero());
    CHECK(nf(ctx, "-0").is_zero());
    CHECK(nf(ctx, "0*[a,b]").is_zero());
    CHECK(nf(ctx, "-a") == Rational(-1) * generator_element(ctx, "a"));
    CHECK(nf(ctx, "a - -1/2*b") == nf(ctx, "a + 1/2*b"));
    CHECK(nf(ctx, "-[a,b]") == -nf(ctx, "[a,b]"));
    CHECK(nf(ctx, "3*a - 3*a").is_zero());

    CHECK_THROWS_AS(parse_expr(""), parse_error);
    CHECK_THROWS_AS(parse_expr("[a"), parse_error);
    CHECK_THROWS_AS(parse_expr("[a,]"), parse_error);
    CHECK_THROWS_AS(parse_expr("a +"), parse_error);
    CHECK_THROWS_AS(parse_expr("2a"), parse_error);
    CHECK_THROWS_AS(parse_expr("7"), parse_error); // bare nonzero scalar
    CHECK_THROWS_AS(parse_expr("a b"), parse_error);
    CHECK_THROWS_AS(parse_expr("1/0*a"), parse_error);

    try {
        parse_expr("[a, ?]");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }

    CHECK_THROWS_AS(nf(ctx, "[a, q]"), alphabet_error);
}

TEST_CASE("printer emits grammar text and round-trips") {
    ContextPtr ctx = interval_context(6);

    CHECK(element_str(LieElement::zero(ctx)) == "0");
    CHECK(element_str(nf(ctx, "[b,a]")) == "[a,b]");
    CHECK(element_str(nf(ctx, "-1/2*[a,a]")) == "-1/2*[a,a]");
    CHECK(element_str(nf(ctx, "b - a")) == "-1*a + b");

    std::mt19937 rng(77);
    const Alphabet& alpha = ctx->alphabet();
    for (int i = 0; i < 100; ++i) {
        LieElement x = normalize(random_combination(rng, 4, 5, alpha), ctx);
        CHECK(nf(ctx, element_str(x)) == x);
    }
}

TEST_CASE("json serialization is shaped and ordered as specified") {
    ContextPtr ctx = interval_context(6);
    LieElement x = nf(ctx, "[a,[b,e]] + 1/3*[a,a] - 2*b");
    Json j = element_json(x);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == x.terms().size());

    // Records carry coeff/tree/length/degree and come sorted by
    // (length, degree, tree order).
    std::vector<std::tuple<int, int, std::string>> keys;
    for (const auto& rec : j) {
        REQUIRE(rec.contains("coeff"));
        REQUIRE(rec.contains("tree"));
        REQUIRE(rec.contains("length"));
        REQUIRE(rec.contains("degree"));
        keys.emplace_back(rec["length"].get<int>(), rec["degree"].get<int>(),
                          rec["tree"].dump());
    }
    CHECK(std::is_sorted(keys.begin(), keys.end(),
                         [](const auto& u, const auto& v) {
                             return std::tie(std::get<0>(u), std::get<1>(u)) <
                                    std::tie(std::get<0>(v), std::get<1>(v));
                         }));

    Json first = j.front();
    CHECK(first["coeff"] == "-2");
    CHECK(first["tree"] == "b");
    Json last = j.back();
    CHECK(last["tree"] == Json::array({"a", Json::array({"b", "e"})}));

    // Determinism: identical inputs give byte-identical output.
    CHECK(element_json(nf(ctx, "[a,[b,e]] + 1/3*[a,a] - 2*b")).dump(2) == j.dump(2));
}

TEST_CASE("cmd_normalize and cmd_diff match the pinned outputs") {
    CliConfig cfg;
    CHECK(cmd_normalize(cfg, "[b,a]").output == "[a,b]\n");
    CHECK(cmd_normalize(cfg, "[e,e]").output == "0\n");
    CHECK(cmd_normalize(cfg, "1/2*[a,[b,e]] + 1/2*[b,[a,e]]").output ==
          cmd_normalize(cfg, "1/2*[[a,b],e]").output);

    CHECK(cmd_diff(cfg, "a").output == "-1/2*[a,a]\n");

    CliConfig cfg2;
    cfg2.max_length = 2;
    ContextPtr ctx2 = interval_context(2);
    LieElement expected = nf(ctx2, "(b - a) + 1/2*[e,a] + 1/2*[e,b]");
    CHECK(nf(ctx2, cmd_diff(cfg2, "e").output) == expected);

    CliConfig cfg_json;
    cfg_json.format = CliConfig::Format::json;
    CHECK(cmd_diff(cfg_json, "a").output == cmd_diff(cfg_json, "a").output);
}

TEST_CASE("cmd_verify exit statuses") {
    CliConfig cfg;
    cfg.max_length = 4;
    CmdResult ok = cmd_verify(cfg);
    CHECK(ok.status == 0);
    CHECK(ok.output.find("FAIL") == std::string::npos);

    cfg.bernoulli_overrides[2] = Rational(1, 10);
    CmdResult bad = cmd_verify(cfg);
    CHECK(bad.status == 1);
    CHECK(bad.output.find("FAIL") != std::string::npos);

    CliConfig tiny;
    tiny.max_length = 1;
    CHECK(cmd_verify(tiny).status == 0);
}

TEST_CASE("cmd_basis lists monomials; out-of-range lengths are usage errors") {
    CliConfig cfg;
    CHECK(cmd_basis(cfg, 1, -1).output == "a\nb\n");
    CHECK(cmd_basis(cfg, 2, -2).output == "[a,a]\n[a,b]\n[b,b]\n");
    CHECK(cmd_basis(cfg, 2, 0).output.empty());
    CHECK_THROWS_AS(cmd_basis(cfg, 7, 0), domain_error);
}

TEST_CASE("cmd_bernoulli prints one value per line") {
    CliConfig cfg;
    CHECK(cmd_bernoulli(cfg, 4).output == "0 1\n1 -1/2\n2 1/6\n3 0\n4 -1/30\n");
}

TEST_CASE("cmd_flow reports evaluation, residual, and curvature") {
    CliConfig cfg;
    CmdResult r = cmd_flow(cfg, "e", "a", Rational(1));
    CHECK(r.status == 0);
    CHECK(r.output.find("u(1) = b\n") != std::string::npos);
    CHECK(r.output.find("residual = 0\n") != std::string::npos);
    CHECK(r.output.find("curvature = 0\n") != std::string::npos);

    cfg.format = CliConfig::Format::json;
    Json j = Json::parse(cmd_flow(cfg, "e", "a", Rational(1, 2)).output);
    CHECK(j["t"] == "1/2");
    CHECK(j["residual"] == Json::array());
    CHECK(j["curvature"] == Json::array());
}

TEST_CASE("cmd_export human format spells out the presentation") {
    CliConfig cfg;
    cfg.max_length = 1;
    CHECK(cmd_export(cfg).output == "d(a) = 0\nd(b) = 0\nd(e) = -1*a + b\n");

    cfg.max_length = 2;
    std::string out = cmd_export(cfg).output;
    CHECK(out.find("[a, b] = [a,b]\n") != std::string::npos);
    CHECK(out.find("[a, a] = [a,a]\n") != std::string::npos);
    CHECK(out.find("[e, e] = 0\n") != std::string::npos);
    CHECK(out.find("d(e) = -1*a + b - 1/2*[a,e] - 1/2*[b,e]\n") != std::string::npos);
}

TEST_CASE("cmd_export: truncation levels nest") {
    CliConfig small, big;
    small.max_length = 2;
    big.max_length = 3;
    small.format = big.format = CliConfig::Format::json;

    Json js = Json::parse(cmd_export(small).output);
    Json jb = Json::parse(cmd_export(big).output);

    // At max length 1 there are no bracket rows and de = b - a.
    CliConfig unit;
    unit.max_length = 1;
    unit.format = CliConfig::Format::json;
    Json ju = Json::parse(cmd_export(unit).output);
    CHECK(ju["brackets"].empty());
    REQUIRE(ju["differential"].size() == 3);
    CHECK(ju["differential"][0]["value"] == Json::array()); // da truncates away
    CHECK(ju["differential"][2]["value"].size() == 2);      // de = b - a

    // Bracket rows of the small export are a prefix of the big one.
    REQUIRE(js["brackets"].size() <= jb["brackets"].size());
    for (std::size_t i = 0; i < js["brackets"].size(); ++i)
        CHECK(js["brackets"][i] == jb["brackets"][i]);

    // Differential entries agree once the big export is truncated.
    ContextPtr ctx_small = interval_context(2);
    for (const auto& rec : js["differential"]) {
        bool matched = false;
        for (const auto& other : jb["differential"]) {
            if (other["monomial"] != rec["monomial"])
                continue;
            Json truncated = Json::array();
            for (const auto& term : other["value"])
                if (term["length"].get<int>() <= 2)
                    truncated.push_back(term);
            CHECK(truncated == rec["value"]);
            matched = true;
        }
        CHECK(matched);
    }
}

TEST_CASE("the installed binary honors the exit-status contract") {
    CHECK(run_cli("normalize \"[b,a]\"").output == "[a,b]\n");
    CHECK(run_cli("normalize \"[b,a]\"").status == 0);
    CHECK(run_cli("verify").status == 0); // default truncation
    CHECK(run_cli("normalize \"[b,\"").status == 2);
    CHECK(run_cli("normalize \"[q,a]\"").status == 2);
    CHECK(run_cli("basis 9 0 --max-len 4").status == 2);
    CHECK(run_cli("--max-len 3 verify").status == 0);
    CHECK(run_cli("--max-len 4 verify --perturb-bernoulli 2=1/10").status == 1);
    CHECK(run_cli("bogus-subcommand").status == 2);

    RunResult once = run_cli("--max-len 3 --format json export");
    RunResult twice = run_cli("--max-len 3 --format json export");
    CHECK(once.status == 0);
    CHECK(once.output == twice.output);

    RunResult flowed = run_cli("flow --t 1 --format json");
    CHECK(flowed.status == 0);
    Json j = Json::parse(flowed.output);
    CHECK(j["u"].size() == 1);

    CHECK(run_cli("--alphabet x:0,y:-1 normalize \"[x,y]\"").status == 0);
    CHECK(run_cli("--alphabet x:0,y:-1 diff \"x\"").status == 2);
}
