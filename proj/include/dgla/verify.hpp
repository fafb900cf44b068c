#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgla/element.hpp"
#include "dgla/rational.hpp"

namespace dgla {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;                 // human-readable note on failure
    std::optional<LieElement> residual; // the offending element, when one exists
};

struct VerifyOptions {
    int max_length = 6;
    std::map<unsigned, Rational> bernoulli_overrides; // negative controls
};

/// Runs every identity check of the free DGLA on a, b, e at the configured
/// truncation: the differential squares to zero on each generator, the flow
/// generated by e moves a to b in unit time, the flow solves its ODE, the
/// curvature vanishes along the flow, and flowing flat elements by degree 0
/// generators keeps them flat.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace dgla
