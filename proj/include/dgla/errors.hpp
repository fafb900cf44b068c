#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgla {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown generator name, or an alphabet that does not provide what an
// operation needs (e.g. the interval differential without a, b, e).
struct alphabet_error : error {
    using error::error;
};

// Two elements built over different truncation contexts were combined.
struct context_error : error {
    using error::error;
};

// Argument outside an operation's domain (wrong homological degree, ...).
struct domain_error : error {
    using error::error;
};

// A derivation is missing a generator value or a value has the wrong degree.
struct definition_error : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

} // namespace dgla
