#include "dgla/bernoulli.hpp"

#include "dgla/errors.hpp"

namespace dgla {

BernoulliTable BernoulliTable::with_value(std::size_t i, Rational v) const {
    if (i >= values_.size())
        throw domain_error("bernoulli override index out of range");
    std::vector<Rational> vals = values_;
    vals[i] = std::move(v);
    return BernoulliTable(std::move(vals));
}

BernoulliTable bernoulli_upto(unsigned n) {
    std::vector<Rational> b;
    b.reserve(n + 1);
    b.push_back(Rational(1));
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc;
        for (unsigned k = 0; k < m; ++k)
            acc += Rational::binomial(m + 1, k) * b[k];
        b.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return BernoulliTable(std::move(b));
}

} // namespace dgla
