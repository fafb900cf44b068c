#include "dgla/monomial.hpp"

#include <stdexcept>

namespace dgla {

bool is_lyndon(std::string_view w) {
    if (w.empty())
        return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w.compare(w.substr(i)) >= 0)
            return false;
    return true;
}

std::pair<Word, Word> standard_factorization(std::string_view w) {
    // The longest proper Lyndon suffix starts at the smallest split point.
    for (std::size_t i = 1; i < w.size(); ++i)
        if (is_lyndon(w.substr(i)))
            return {Word(w.substr(0, i)), Word(w.substr(i))};
    throw std::logic_error("standard_factorization: not a Lyndon word");
}

LieMonomial::LieMonomial(Word word, const Alphabet& alphabet)
    : word_(std::move(word)), degree_(alphabet.word_degree(word_)), square_(false) {
    if (word_.empty())
        throw std::logic_error("empty monomial word");
    for (char c : word_)
        if (static_cast<unsigned char>(c) >= static_cast<unsigned>(alphabet.size()))
            throw std::logic_error("monomial letter outside alphabet");
    if (is_lyndon(word_))
        return;
    // Only remaining legal shape: [m,m] with m an odd-degree Lyndon monomial.
    std::size_t half = word_.size() / 2;
    bool ok = word_.size() % 2 == 0 && word_.compare(0, half, word_, half, half) == 0 &&
              is_lyndon(std::string_view(word_).substr(0, half)) &&
              (alphabet.word_degree(std::string_view(word_).substr(0, half)) & 1) != 0;
    if (!ok)
        throw std::logic_error("word is not a normal-form monomial");
    square_ = true;
}

std::pair<LieMonomial, LieMonomial> LieMonomial::factors(const Alphabet& alphabet) const {
    if (length() < 2)
        throw std::logic_error("generator monomial has no factors");
    if (square_) {
        LieMonomial half(root_word(), alphabet);
        return {half, half};
    }
    auto [u, v] = standard_factorization(word_);
    return {LieMonomial(std::move(u), alphabet), LieMonomial(std::move(v), alphabet)};
}

} // namespace dgla
