#include "dgla/print.hpp"

#include <sstream>

namespace dgla {

std::string monomial_str(const LieMonomial& m, const Alphabet& alphabet) {
    if (m.is_generator())
        return alphabet.at(static_cast<unsigned char>(m.word()[0])).name;
    auto [l, r] = m.factors(alphabet);
    return "[" + monomial_str(l, alphabet) + "," + monomial_str(r, alphabet) + "]";
}

std::string element_str(const LieElement& x) {
    if (x.is_zero())
        return "0";
    const Alphabet& alphabet = x.context()->alphabet();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        Rational coeff = c;
        if (first) {
            first = false;
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
            if (coeff.sign() < 0)
                coeff = -coeff;
        }
        if (coeff == Rational(1))
            os << monomial_str(m, alphabet);
        else
            os << coeff.str() << "*" << monomial_str(m, alphabet);
    }
    return os.str();
}

namespace {

Json tree_json_impl(const LieMonomial& m, const Alphabet& alphabet) {
    if (m.is_generator())
        return alphabet.at(static_cast<unsigned char>(m.word()[0])).name;
    auto [l, r] = m.factors(alphabet);
    return Json::array({tree_json_impl(l, alphabet), tree_json_impl(r, alphabet)});
}

} // namespace

Json monomial_tree_json(const LieMonomial& m, const Alphabet& alphabet) {
    return tree_json_impl(m, alphabet);
}

Json monomial_json(const LieMonomial& m, const Alphabet& alphabet) {
    Json j;
    j["tree"] = monomial_tree_json(m, alphabet);
    j["length"] = m.length();
    j["degree"] = m.degree();
    return j;
}

Json element_json(const LieElement& x) {
    const Alphabet& alphabet = x.context()->alphabet();
    Json list = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json rec;
        rec["coeff"] = c.str();
        rec["tree"] = monomial_tree_json(m, alphabet);
        rec["length"] = m.length();
        rec["degree"] = m.degree();
        list.push_back(std::move(rec));
    }
    return list;
}

} // namespace dgla
