#pragma once

#include <string>

#include <json.hpp>

#include "dgla/alphabet.hpp"
#include "dgla/element.hpp"
#include "dgla/monomial.hpp"

namespace dgla {

using Json = nlohmann::ordered_json;

/// Fully bracketed form, e.g. "[a,[a,b]]"; a bare name for generators.
std::string monomial_str(const LieMonomial& m, const Alphabet& alphabet);

/// Expression-grammar text, re-parseable; "0" for the zero element.
/// Terms appear in the canonical (length, degree, word) order.
std::string element_str(const LieElement& x);

/// Nested two-element arrays with generator-name leaves.
Json monomial_tree_json(const LieMonomial& m, const Alphabet& alphabet);

/// Record for one monomial: {tree, length, degree}.
Json monomial_json(const LieMonomial& m, const Alphabet& alphabet);

/// List of {coeff, tree, length, degree} records in canonical order.
Json element_json(const LieElement& x);

} // namespace dgla
