#include "dgla/alphabet.hpp"

#include <set>

#include "dgla/errors.hpp"

namespace dgla {

Alphabet::Alphabet(std::vector<GradedGenerator> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty())
        throw alphabet_error("alphabet must not be empty");
    if (generators_.size() > 200)
        throw alphabet_error("alphabet too large");
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.name.empty())
            throw alphabet_error("generator with empty name");
        if (!seen.insert(g.name).second)
            throw alphabet_error("duplicate generator name '" + g.name + "'");
    }
}

Alphabet Alphabet::interval() {
    return Alphabet({{"a", -1}, {"b", -1}, {"e", 0}});
}

int Alphabet::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (generators_[i].name == name)
            return i;
    throw alphabet_error("unknown generator '" + std::string(name) + "'");
}

bool Alphabet::contains(std::string_view name) const {
    for (const auto& g : generators_)
        if (g.name == name)
            return true;
    return false;
}

int Alphabet::word_degree(std::string_view word) const {
    int d = 0;
    for (char c : word)
        d += degree(static_cast<unsigned char>(c));
    return d;
}

Context::Context(Alphabet alphabet, int max_length)
    : alphabet_(std::move(alphabet)), max_length_(max_length) {
    if (max_length < 1)
        throw domain_error("truncation length must be positive");
}

ContextPtr make_context(Alphabet alphabet, int max_length) {
    return std::make_shared<const Context>(std::move(alphabet), max_length);
}

ContextPtr interval_context(int max_length) {
    return make_context(Alphabet::interval(), max_length);
}

} // namespace dgla
