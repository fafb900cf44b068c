#include "dgla/basis.hpp"

#include <algorithm>

#include "dgla/errors.hpp"

namespace dgla {

std::vector<Word> lyndon_words(int letters, int length) {
    std::vector<Word> out;
    if (letters < 1 || length < 1)
        return out;
    // Duval's generation of Lyndon words of length <= n in lex order.
    Word w(1, char(-1));
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == length)
            out.push_back(w);
        std::size_t m = w.size();
        while (static_cast<int>(w.size()) < length)
            w.push_back(w[w.size() % m]);
        while (!w.empty() && w.back() == static_cast<char>(letters - 1))
            w.pop_back();
    }
    return out;
}

std::vector<LieMonomial> enumerate_basis(const Context& ctx, int length) {
    if (length < 1 || length > ctx.max_length())
        throw domain_error("basis length outside 1..max_length");
    const Alphabet& alpha = ctx.alphabet();
    std::vector<LieMonomial> out;
    for (const Word& w : lyndon_words(alpha.size(), length))
        out.emplace_back(w, alpha);
    if (length % 2 == 0) {
        for (const Word& w : lyndon_words(alpha.size(), length / 2))
            if ((alpha.word_degree(w) & 1) != 0)
                out.emplace_back(w + w, alpha);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LieMonomial> enumerate_basis(const Context& ctx, int length, int degree) {
    std::vector<LieMonomial> out;
    for (const LieMonomial& m : enumerate_basis(ctx, length))
        if (m.degree() == degree)
            out.push_back(m);
    return out;
}

} // namespace dgla
