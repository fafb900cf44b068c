#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dgla/bernoulli.hpp"
#include "dgla/element.hpp"

namespace dgla {

/// Graded derivation, specified by its values on generators and extended to
/// the whole algebra by the graded Leibniz rule
///   D[p,q] = [Dp,q] + (-1)^{d|p|}[p,Dq],   d = degree_shift.
/// Generator values must be homogeneous of degree |g| + d (or zero).
class Derivation {
public:
    Derivation(ContextPtr ctx, int degree_shift,
               const std::map<std::string, LieElement>& generator_values);

    const ContextPtr& context() const { return ctx_; }
    int degree_shift() const { return shift_; }

    bool defines(int generator_index) const;
    /// Value on a generator; throws definition_error when undefined.
    const LieElement& value(int generator_index) const;
    const LieElement& value(std::string_view generator_name) const;

private:
    ContextPtr ctx_;
    int shift_;
    std::vector<LieElement> values_;
    std::vector<bool> defined_;
};

/// Leibniz extension of D to an arbitrary element.
LieElement apply(const Derivation& d, const LieElement& x);

/// The degree -1 differential of the free DGLA on a, b, e that makes a and b
/// flat and flows a to b in unit time:
///   da = -1/2 [a,a],  db = -1/2 [b,b],
///   de = ad_e(b) + sum_{i>=0} (B_i/i!) ad_e^i(b - a),
/// the series truncating at i = max_length - 1.
Derivation interval_differential(const ContextPtr& ctx);

/// Same, with a caller-supplied Bernoulli table (size >= max_length), which
/// makes perturbed differentials for negative controls possible.
Derivation interval_differential(const ContextPtr& ctx, const BernoulliTable& table);

/// D(x) + 1/2 [x,x] for x homogeneous of degree -1 (or zero).
LieElement curvature(const Derivation& d, const LieElement& x);

/// True iff the curvature vanishes modulo the truncation.
bool is_flat(const Derivation& d, const LieElement& x);

struct SquareZeroEntry {
    std::string generator;
    LieElement residual; // D(D(g)); zero when D squares to zero on g
};

/// D^2 on every generator. By the Leibniz rule, D^2 = 0 on generators forces
/// D^2 = 0 everywhere.
std::vector<SquareZeroEntry> check_square_zero(const Derivation& d);

} // namespace dgla
