#ifndef SHIFTFLIP_MARKOV_SHIFT_HPP
#define SHIFTFLIP_MARKOV_SHIFT_HPP

// The topological Markov chain X_A of a zero-one matrix: admissible blocks,
// word utilities, and brute-force periodic-point enumeration. The enumerators
// here are the oracles the closed-form counts in zeta.hpp are tested against.

#include <cstddef>
#include <vector>

#include "shiftflip/flip_pair.hpp"

namespace shiftflip {

inline constexpr std::size_t kDefaultMaxPeriod = 12;

/// Adjacency of a zero-one square matrix.
class TransitionGraph {
public:
    explicit TransitionGraph(const IntMatrix& A);

    std::size_t size() const noexcept { return successors_.size(); }
    bool allowed(Symbol a, Symbol b) const { return allowed_[a * size() + b] != 0; }
    const std::vector<Symbol>& successors(Symbol a) const { return successors_[a]; }

    /// Symbols lying on a bi-infinite path.
    const std::vector<char>& essential() const noexcept { return essential_; }
    bool is_essential() const;

private:
    std::vector<char> allowed_;
    std::vector<std::vector<Symbol>> successors_;
    std::vector<char> essential_;
};

/// Every symbol of A lies on a bi-infinite path (no stranded symbols).
bool is_essential(const IntMatrix& A);

/// B_n(X_A) in lexicographic order of symbol indices. n must be >= 1.
std::vector<Word> blocks(const IntMatrix& A, std::size_t n);

/// Whether w occurs in some point of X_A.
bool is_admissible(const TransitionGraph& g, const Word& w);

Word reverse_word(const Word& w);
/// l(w): w without its last symbol.
Word left(const Word& w);
/// r(w): w without its first symbol.
Word right(const Word& w);
Symbol initial(const Word& w);
Symbol terminal(const Word& w);
/// Middle symbol of an odd-length word.
Symbol center(const Word& w);
Word concat(const Word& a, const Word& b);

/// A point of X_A fixed by sigma^m, stored as the cyclic word x_0 .. x_{m-1}.
struct PeriodicPoint {
    Word symbols;

    std::size_t period() const noexcept { return symbols.size(); }
    /// x_i for any integer i (indices wrap modulo the period).
    Symbol at(long i) const;

    friend bool operator==(const PeriodicPoint&, const PeriodicPoint&) = default;
    friend auto operator<=>(const PeriodicPoint&, const PeriodicPoint&) = default;
};

struct EnumerationLimits {
    std::size_t max_period = kDefaultMaxPeriod;
};

/// All x with sigma^m(x) = x, lexicographically ordered. |result| == tr(A^m).
std::vector<PeriodicPoint> enumerate_periodic(const IntMatrix& A, std::size_t m, const EnumerationLimits& limits = {});

/// sigma^k(x): (sigma^k x)_i = x_{i+k}.
PeriodicPoint shift_point(const PeriodicPoint& x, long k);

/// phi_{J,A}(x)_i = tau_J(x_{-i}).
PeriodicPoint flip_point(const FlipPair& p, const PeriodicPoint& x);

/// Whether sigma^n(phi(x)) == x, i.e. tau_J(x_{-i-n}) == x_i for all i.
bool fixed_by_shifted_flip(const FlipPair& p, const PeriodicPoint& x, long n);

/// n mod m in [0, m).
long normalize_shift(long n, std::size_t m);

/// |{x : sigma^m x = x and sigma^n phi_{J,A} x = x}| by enumeration.
std::size_t count_pmn_bruteforce(const FlipPair& p, std::size_t m, long n, const EnumerationLimits& limits = {});

}  // namespace shiftflip

#endif  // SHIFTFLIP_MARKOV_SHIFT_HPP
