#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dgla/alphabet.hpp"
#include "dgla/rational.hpp"

namespace dgla {

struct CliConfig {
    enum class Format { human, json };

    int max_length = 6;
    Format format = Format::human;
    Alphabet alphabet = Alphabet::interval();
    std::map<unsigned, Rational> bernoulli_overrides;
};

struct CmdResult {
    int status = 0; // 0 ok, 1 verification failure; usage errors throw
    std::string output;
};

CmdResult cmd_normalize(const CliConfig& cfg, std::string_view expr_text);
CmdResult cmd_diff(const CliConfig& cfg, std::string_view expr_text);
CmdResult cmd_verify(const CliConfig& cfg);
CmdResult cmd_flow(const CliConfig& cfg, std::string_view v_text, std::string_view u0_text,
                   const Rational& t);
CmdResult cmd_basis(const CliConfig& cfg, int length, int degree);
CmdResult cmd_bernoulli(const CliConfig& cfg, unsigned upto);
CmdResult cmd_export(const CliConfig& cfg);

} // namespace dgla
