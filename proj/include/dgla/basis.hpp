#pragma once

#include <vector>

#include "dgla/alphabet.hpp"
#include "dgla/monomial.hpp"

namespace dgla {

/// All Lyndon words of exactly the given length over `letters` letters,
/// in lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(int letters, int length);

/// All normal-form monomials of the given word length and homological degree,
/// sorted canonically. Lyndon bracketings plus squares of odd monomials.
std::vector<LieMonomial> enumerate_basis(const Context& ctx, int length, int degree);

/// All normal-form monomials of the given word length, any degree.
std::vector<LieMonomial> enumerate_basis(const Context& ctx, int length);

} // namespace dgla
