#pragma once

// Shared test helpers: parse-and-normalize shortcuts, random raw bracket
// trees, and an exact rank oracle over the associative envelope. Everything
// here goes through the oracle path, never the rewriter, except nf() itself.

#include <map>
#include <random>
#include <vector>

#include "dgla/assoc.hpp"
#include "dgla/basis.hpp"
#include "dgla/element.hpp"
#include "dgla/parse.hpp"

namespace dgla::testing {

inline LieElement nf(const ContextPtr& ctx, std::string_view text) {
    return normalize(parse_expr(text), ctx);
}

inline Word word_of(const Alphabet& alpha, std::string_view names) {
    Word w;
    for (char c : names)
        w.push_back(static_cast<char>(alpha.index_of(std::string(1, c))));
    return w;
}

inline Expr random_tree(std::mt19937& rng, int leaves, const Alphabet& alpha) {
    if (leaves <= 1) {
        std::uniform_int_distribution<int> pick(0, alpha.size() - 1);
        return Expr::generator(alpha.at(pick(rng)).name);
    }
    std::uniform_int_distribution<int> split(1, leaves - 1);
    int s = split(rng);
    return Expr::bracket(random_tree(rng, s, alpha), random_tree(rng, leaves - s, alpha));
}

/// Random linear combination of random trees, lengths in [1, max_leaves].
inline Expr random_combination(std::mt19937& rng, int terms, int max_leaves,
                               const Alphabet& alpha) {
    std::uniform_int_distribution<int> leaves(1, max_leaves);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 4);
    Expr acc = Expr::zero();
    for (int i = 0; i < terms; ++i) {
        Rational c(num(rng), den(rng));
        acc = Expr::sum(std::move(acc), Expr::scale(c, random_tree(rng, leaves(rng), alpha)));
    }
    return acc;
}

/// Every full bracketing of every word of the given length.
inline std::vector<Expr> all_bracketings(int leaves, const Alphabet& alpha) {
    std::vector<Expr> out;
    if (leaves == 1) {
        for (const auto& g : alpha.generators())
            out.push_back(Expr::generator(g.name));
        return out;
    }
    for (int s = 1; s < leaves; ++s)
        for (const Expr& l : all_bracketings(s, alpha))
            for (const Expr& r : all_bracketings(leaves - s, alpha))
                out.push_back(Expr::bracket(l, r));
    return out;
}

/// Exact rank over the rationals of a family of noncommutative polynomials,
/// by Gaussian elimination on leading words.
inline int rank(std::vector<NcPolynomial> rows) {
    std::map<Word, NcPolynomial> pivots; // keyed by leading (minimal) word
    int r = 0;
    for (NcPolynomial& row : rows) {
        while (!row.is_zero()) {
            bool hit = false;
            for (const auto& [lead, pivot] : pivots) {
                auto it = row.terms().find(lead);
                if (it != row.terms().end()) {
                    NcPolynomial scaled = pivot;
                    scaled *= it->second;
                    row -= scaled;
                    hit = true;
                    break;
                }
            }
            if (!hit)
                break;
        }
        if (row.is_zero())
            continue;
        Rational lead_coeff = row.terms().begin()->second;
        row *= Rational(1) / lead_coeff;
        pivots.emplace(row.terms().begin()->first, row);
        ++r;
    }
    return r;
}

} // namespace dgla::testing
