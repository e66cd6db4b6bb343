#ifndef SHIFTFLIP_CONSTRUCTIONS_HPP
#define SHIFTFLIP_CONSTRUCTIONS_HPP

// Constructive machinery on flip pairs:
//
//  * higher_block: the (n+1)-block flip pair together with the lag-n chain of
//    half elementary equivalences R(u, v) = [u = l(v)], S(v, u) = [u = r(v)].
//  * build_flip_pair: a flip pair conjugate to (X_A, sigma, phi) for a flip
//    phi given by a sliding-block rule of radius n.
//  * decompose_conjugacy: an even-lag chain of half elementary equivalences
//    realizing a one-block conjugacy of shift-flip systems.
//
// Every constructed alphabet is built by scanning admissible blocks, pruned to
// the essential part, and sorted lexicographically, so the matrices are
// reproducible entry for entry.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "shiftflip/equivalence.hpp"
#include "shiftflip/flip_pair.hpp"
#include "shiftflip/markov_shift.hpp"

namespace shiftflip {

inline constexpr std::size_t kDefaultCheckPeriod = 6;

/// Label of a block: labels concatenated when every label is one character
/// ("12"), joined by '.' otherwise ("a1.b2").
std::string block_label(const Labels& alphabet, const Word& w);

/// The k-block flip pair of p (k >= 1): alphabet B_k(X_A),
/// A_k(u, v) = 1 iff u t(v) is admissible with r(u) = l(v), and
/// J_k(u, v) = 1 iff v = flip_word(u). Requires an essential pair.
FlipPair block_pair(const FlipPair& p, std::size_t k);

struct HigherBlockResult {
    FlipPair pair;                   // the (n+1)-block pair
    StrongChain chain;               // lag n, from p to `pair`
    std::vector<std::vector<Word>> level_blocks;  // B_1 .. B_{n+1}
};

/// Requires p essential and n >= 1 (n = 0 returns p and the trivial chain).
HigherBlockResult higher_block(const FlipPair& p, std::size_t n);

/// phi(x)_0 = Phi(x_{[-n, n]}) for a window n.
struct BlockFlipSpec {
    IntMatrix A;
    std::size_t window = 0;
    std::map<Word, Symbol> phi;
};

/// A sliding-block code y_i = table(x_{[i - memory, i + anticipation]}).
struct BlockMap {
    std::size_t memory = 0;
    std::size_t anticipation = 0;
    std::map<Word, Symbol> table;
};

/// phi(x)_i = Phi(x_{[-i-n, -i+n]}).
PeriodicPoint apply_block_flip(const BlockFlipSpec& spec, const PeriodicPoint& x);
PeriodicPoint apply_block_map(const BlockMap& map, const PeriodicPoint& x);

/// Phi total on B_{2n+1}(X_A) and, on periodic points of period <= check_period,
/// phi(X_A) in X_A, phi^2 = id and sigma phi = phi sigma^{-1}. Throws
/// InputError / CheckFailure naming the failed property.
void validate_block_flip(const BlockFlipSpec& spec, std::size_t check_period = kDefaultCheckPeriod);

struct BuiltFlipPair {
    FlipPair pair;
    /// theta(x)_i = (x_{[i-n, i+n]}, reversed phi(x)_{[-i-n, -i+n]}), read off x_{[i-2n, i+2n]}.
    BlockMap theta;
    /// The (u, v) word pair of each letter, in alphabet order.
    std::vector<std::pair<Word, Word>> letters;
};

BuiltFlipPair build_flip_pair(const BlockFlipSpec& spec, std::size_t check_period = kDefaultCheckPeriod);

/// A one-block conjugacy psi: (X_A, sigma, phi_J) -> (X_B, sigma, phi_K) whose
/// inverse has window radius inverse_window.
struct OneBlockConjugacySpec {
    FlipPair source;
    FlipPair target;
    SymbolMap psi;
    std::size_t inverse_window = 0;
};

PeriodicPoint apply_one_block(const SymbolMap& psi, const PeriodicPoint& x);

/// Checks psi maps X_A into X_B, intertwines the flips, has an inverse of
/// the declared window, and is a bijection on periodic points up to check_period.
void validate_conjugacy(const OneBlockConjugacySpec& spec, std::size_t check_period = kDefaultCheckPeriod);

struct Decomposition {
    /// Lag 4m, source -> target (m >= 1) or lag 0 (m = 0).
    StrongChain chain;
    /// Maps symbols of chain.pairs.back() to target symbols (identity for m >= 1).
    std::vector<Symbol> terminal_relabel;
    /// The composed gamma equals sigma^shift o psi; shift = 2m.
    std::size_t shift = 0;
    /// Alphabet sizes |A_k| of the intermediate pairs (C_k, L_k), k = 1..2m+1.
    std::vector<std::size_t> level_sizes;
};

/// Builds (C_k, L_k) and the links (D_k, E_k), identifies (C_{2m+1}, L_{2m+1})
/// with the (2m+1)-block pair of the target and appends the reversed
/// higher-block chain. Every link is checked with he_check and the composed
/// gamma is compared with psi on periodic points up to check_period.
Decomposition decompose_conjugacy(const OneBlockConjugacySpec& spec, std::size_t check_period = kDefaultCheckPeriod);

/// Composed gamma of the decomposition, relabelled into the target alphabet.
PeriodicPoint decomposition_gamma(const Decomposition& d, const PeriodicPoint& x);

}  // namespace shiftflip

#endif  // SHIFTFLIP_CONSTRUCTIONS_HPP
