#ifndef SHIFTFLIP_CORPUS_HPP
#define SHIFTFLIP_CORPUS_HPP

// Seeded random inputs for property suites. A seed fully determines the output.

#include <cstdint>
#include <random>
#include <vector>

#include "shiftflip/flip_pair.hpp"
#include "shiftflip/power_series.hpp"

namespace shiftflip {

using Rng = std::mt19937_64;

/// A uniformly random involution of {0, .., n-1}.
SymbolMap random_involution(Rng& rng, std::size_t n);

/// An essential flip pair on n symbols: J is a random involution and A has
/// A(a, c) = A(tau c, tau a), each orbit of that symmetry switched on with
/// probability `density`. Redraws until A is essential.
FlipPair random_flip_pair(Rng& rng, std::size_t n, double density = 0.45);

/// `count` pairs with alphabet sizes uniform in [1, max_alphabet].
std::vector<FlipPair> random_flip_corpus(std::uint64_t seed, std::size_t count, std::size_t max_alphabet = 6);

/// Coefficients p/q with |p| <= 9, 1 <= q <= 6; constant term forced to 0 if requested.
TruncatedSeries random_series(Rng& rng, std::size_t order, bool zero_constant);

}  // namespace shiftflip

#endif  // SHIFTFLIP_CORPUS_HPP
