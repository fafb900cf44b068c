#include "dgla/rational.hpp"

#include <cctype>
#include <ostream>

#include "dgla/errors.hpp"

namespace dgla {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && s[i] == '-') {
        negative = true;
        ++i;
    }
    auto digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            out.push_back(s[i++]);
        return i > start;
    };
    std::string num, den = "1";
    if (!digits(num))
        throw domain_error("malformed rational '" + std::string(s) + "'");
    if (i < s.size() && s[i] == '/') {
        ++i;
        den.clear();
        if (!digits(den))
            throw domain_error("malformed rational '" + std::string(s) + "'");
    }
    if (i != s.size())
        throw domain_error("malformed rational '" + std::string(s) + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw domain_error("rational with zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    if (negative)
        q = -q;
    return Rational(std::move(q));
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::pow(unsigned long k) const {
    mpq_class acc(1);
    mpq_class base = v_;
    for (; k > 0; --k)
        acc *= base;
    return Rational(std::move(acc));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace dgla
