#pragma once

#include <cstddef>
#include <vector>

#include "dgla/rational.hpp"

namespace dgla {

/// Bernoulli numbers B_0..B_n in the x/(e^x - 1) convention: B_1 = -1/2.
class BernoulliTable {
public:
    explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

    const Rational& at(std::size_t i) const { return values_.at(i); }
    std::size_t size() const { return values_.size(); }
    const std::vector<Rational>& values() const { return values_; }

    /// Copy with one entry replaced; used by the negative controls.
    BernoulliTable with_value(std::size_t i, Rational v) const;

private:
    std::vector<Rational> values_;
};

/// B_0..B_n from the defining recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0.
BernoulliTable bernoulli_upto(unsigned n);

} // namespace dgla
