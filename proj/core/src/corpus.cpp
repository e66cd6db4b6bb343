#include "shiftflip/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "shiftflip/markov_shift.hpp"

namespace shiftflip {

SymbolMap random_involution(Rng& rng, std::size_t n) {
    std::vector<Symbol> order(n);
    std::iota(order.begin(), order.end(), Symbol{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Symbol> image(n);
    std::iota(image.begin(), image.end(), Symbol{0});
    std::bernoulli_distribution pair_up(0.5);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        if (pair_up(rng)) {
            image[order[i]] = order[i + 1];
            image[order[i + 1]] = order[i];
        }
    }
    return SymbolMap(std::move(image));
}

FlipPair random_flip_pair(Rng& rng, std::size_t n, double density) {
    const Labels labels = numbered_labels(n);
    std::bernoulli_distribution edge(density);
    for (;;) {
        const SymbolMap tau = random_involution(rng, n);
        IntMatrix A(labels, labels);
        IntMatrix J(labels, labels);
        for (Symbol a = 0; a < n; ++a) J(a, tau(a)) = 1;
        for (Symbol a = 0; a < n; ++a) {
            for (Symbol c = 0; c < n; ++c) {
                const Symbol a2 = tau(c);
                const Symbol c2 = tau(a);
                // Decide each orbit {(a, c), (tau c, tau a)} once, at its smaller member.
                if (std::pair(a2, c2) < std::pair(a, c)) continue;
                const long bit = edge(rng) ? 1 : 0;
                A(a, c) = bit;
                A(a2, c2) = bit;
            }
        }
        if (is_essential(A)) return validate_flip_pair(std::move(A), std::move(J), "random" + std::to_string(n));
    }
}

std::vector<FlipPair> random_flip_corpus(std::uint64_t seed, std::size_t count, std::size_t max_alphabet) {
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, max_alphabet);
    std::vector<FlipPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_flip_pair(rng, size(rng)));
    return out;
}

TruncatedSeries random_series(Rng& rng, std::size_t order, bool zero_constant) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    TruncatedSeries s(order);
    for (std::size_t k = zero_constant ? 1 : 0; k <= order; ++k) {
        const long p = num(rng);
        const long q = den(rng);
        s[k] = Rational(Integer(p), Integer(q));
        s[k].canonicalize();
    }
    return s;
}

}  // namespace shiftflip
