#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dgla/cli.hpp"
#include "dgla/errors.hpp"
#include "dgla/parse.hpp"

namespace {

dgla::Alphabet parse_alphabet(const std::string& spec) {
    std::vector<dgla::GradedGenerator> gens;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw dgla::alphabet_error("alphabet entries must look like name:degree");
        int degree = 0;
        try {
            std::size_t used = 0;
            degree = std::stoi(item.substr(colon + 1), &used);
            if (used != item.size() - colon - 1)
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw dgla::alphabet_error("bad degree in alphabet entry '" + item + "'");
        }
        gens.push_back({item.substr(0, colon), degree});
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return dgla::Alphabet(std::move(gens));
}

void apply_perturbations(dgla::CliConfig& cfg, const std::vector<std::string>& specs) {
    for (const auto& s : specs) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw dgla::domain_error("--perturb-bernoulli expects i=p/q");
        unsigned index = static_cast<unsigned>(std::stoul(s.substr(0, eq)));
        cfg.bernoulli_overrides[index] = dgla::parse_rational(s.substr(eq + 1));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact free differential graded Lie algebra on a, b, e: "
                 "normal forms, the flat-interval differential, and gauge flows, "
                 "all modulo brackets longer than a configurable cutoff."};
    app.require_subcommand(1);

    int max_length = 6;
    std::string format = "human";
    std::string alphabet_spec;
    std::vector<std::string> perturb_specs;
    app.add_option("--max-len", max_length, "Bracket-length truncation")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json"}));
    app.add_option("--alphabet", alphabet_spec,
                   "Generator alphabet as name:degree,... (default a:-1,b:-1,e:0)");
    app.add_option("--perturb-bernoulli", perturb_specs,
                   "Replace B_i, as i=p/q (negative controls)");

    std::string expr_text, v_text = "e", u0_text = "a", t_text = "0";
    int basis_length = 1, basis_degree = 0;
    unsigned bernoulli_upto = 20;

    CLI::App* normalize = app.add_subcommand("normalize", "Normal form of an expression");
    normalize->add_option("expr", expr_text, "Bracket expression")->required();

    CLI::App* diff = app.add_subcommand("diff", "Apply the differential to an expression");
    diff->add_option("expr", expr_text, "Bracket expression")->required();

    app.add_subcommand("verify", "Run every identity check; exit 1 on failure");

    CLI::App* flow = app.add_subcommand("flow", "Evaluate the gauge flow at a rational time");
    flow->add_option("--t", t_text, "Flow time p/q")->required();
    flow->add_option("--v", v_text, "Degree 0 flow generator (default e)");
    flow->add_option("--u0", u0_text, "Degree -1 initial value (default a)");

    CLI::App* basis = app.add_subcommand("basis", "List basis monomials");
    basis->add_option("length", basis_length, "Word length")->required();
    basis->add_option("degree", basis_degree, "Homological degree")->required();

    CLI::App* bernoulli = app.add_subcommand("bernoulli", "Print Bernoulli numbers");
    bernoulli->add_option("n", bernoulli_upto, "Largest index (default 20)");

    app.add_subcommand("export", "Structure constants and differential of the truncation");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        dgla::CliConfig cfg;
        cfg.max_length = max_length;
        cfg.format = format == "json" ? dgla::CliConfig::Format::json
                                      : dgla::CliConfig::Format::human;
        if (!alphabet_spec.empty())
            cfg.alphabet = parse_alphabet(alphabet_spec);
        apply_perturbations(cfg, perturb_specs);

        dgla::CmdResult result;
        if (normalize->parsed())
            result = dgla::cmd_normalize(cfg, expr_text);
        else if (diff->parsed())
            result = dgla::cmd_diff(cfg, expr_text);
        else if (app.get_subcommand("verify")->parsed())
            result = dgla::cmd_verify(cfg);
        else if (flow->parsed())
            result = dgla::cmd_flow(cfg, v_text, u0_text, dgla::parse_rational(t_text));
        else if (basis->parsed())
            result = dgla::cmd_basis(cfg, basis_length, basis_degree);
        else if (bernoulli->parsed())
            result = dgla::cmd_bernoulli(cfg, bernoulli_upto);
        else
            result = dgla::cmd_export(cfg);

        std::cout << result.output;
        return result.status;
    } catch (const dgla::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
