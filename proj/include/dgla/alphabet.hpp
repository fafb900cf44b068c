#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dgla {

struct GradedGenerator {
    std::string name;
    int degree = 0;

    friend bool operator==(const GradedGenerator& a, const GradedGenerator& b) {
        return a.name == b.name && a.degree == b.degree;
    }
};

/// Ordered generator alphabet. The declaration order is the total order used
/// for Lyndon normal forms.
class Alphabet {
public:
    explicit Alphabet(std::vector<GradedGenerator> generators);

    /// The default alphabet {a:-1, b:-1, e:0}, in that order.
    static Alphabet interval();

    int size() const { return static_cast<int>(generators_.size()); }
    const GradedGenerator& at(int index) const { return generators_.at(index); }

    /// Index of a generator by name; throws alphabet_error when unknown.
    int index_of(std::string_view name) const;
    bool contains(std::string_view name) const;

    int degree(int index) const { return generators_.at(index).degree; }

    /// Sum of letter degrees of a word of generator indices.
    int word_degree(std::string_view word) const;

    const std::vector<GradedGenerator>& generators() const { return generators_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.generators_ == b.generators_;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    std::vector<GradedGenerator> generators_;
};

/// Truncation context: every element is interpreted modulo brackets of word
/// length greater than max_length. Operations combining two elements require
/// equal contexts.
class Context {
public:
    Context(Alphabet alphabet, int max_length);

    const Alphabet& alphabet() const { return alphabet_; }
    int max_length() const { return max_length_; }

    friend bool operator==(const Context& a, const Context& b) {
        return a.max_length_ == b.max_length_ && a.alphabet_ == b.alphabet_;
    }
    friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }

private:
    Alphabet alphabet_;
    int max_length_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(Alphabet alphabet, int max_length);

/// Context over the default alphabet {a:-1, b:-1, e:0}.
ContextPtr interval_context(int max_length);

} // namespace dgla
