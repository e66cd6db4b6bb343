#ifndef SHIFTFLIP_EQUIVALENCE_HPP
#define SHIFTFLIP_EQUIVALENCE_HPP

// Certificates relating two flip pairs (A, J) and (B, K).
//
// Half elementary equivalence:  A = RS, B = SR, S = K R^T J  (R, S zero-one).
// Strong shift-flip equivalence of lag k: a chain of k half elementary
// equivalences. Shift-flip equivalence of lag k: nonnegative integral (R, S)
// with A^k = RS, B^k = SR, AR = RB and S = K R^T J.
//
// S is always derived from R as K R^T J. Entry-wise this reads
// S(b, a) = R(tau_J(a), tau_K(b)).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftflip/flip_pair.hpp"
#include "shiftflip/markov_shift.hpp"

namespace shiftflip {

inline constexpr std::size_t kDefaultHeCellBudget = 30;
inline constexpr std::size_t kDefaultSfeNodeBudget = 50'000'000;

/// A (source alphabet) x (target alphabet) matrix labelled for a link.
IntMatrix link_matrix(const FlipPair& src, const FlipPair& dst, const std::vector<std::vector<Integer>>& rows);

/// K R^T J.
IntMatrix derive_S(const FlipPair& src, const FlipPair& dst, const IntMatrix& R);
/// J S^T K.
IntMatrix derive_R(const FlipPair& src, const FlipPair& dst, const IntMatrix& S);

struct HalfElemCert {
    FlipPair source;
    FlipPair target;
    IntMatrix R;
    IntMatrix S;
};

/// Derives S = K R^T J and checks A = RS, B = SR. A supplied S must match
/// the derived one. Throws InputError for shape problems and CheckFailure
/// naming the first violated identity.
HalfElemCert he_check(const FlipPair& src, const FlipPair& dst, const IntMatrix& R,
                      const std::optional<IntMatrix>& supplied_S = std::nullopt);

/// All half elementary equivalences from src to dst, in lexicographic order
/// of R (row-major, 0 < 1), up to max_solutions. Throws BudgetExceeded when
/// |src| * |dst| > cell_budget.
std::vector<HalfElemCert> he_search(const FlipPair& src, const FlipPair& dst, std::size_t max_solutions,
                                    std::size_t cell_budget = kDefaultHeCellBudget);

/// Gamma_{R,S}(a1 a2): the unique b with R(a1, b) = S(b, a2) = 1.
/// Requires A(a1, a2) = 1.
Symbol gamma_block(const HalfElemCert& cert, Symbol a1, Symbol a2);

/// gamma_{R,S}(x)_i = Gamma_{R,S}(x_i x_{i+1}).
PeriodicPoint gamma_point(const HalfElemCert& cert, const PeriodicPoint& x);

struct PointCounterexample {
    PeriodicPoint point;
    PeriodicPoint lhs;
    PeriodicPoint rhs;
};

struct Prop22Report {
    std::size_t points_checked = 0;
    std::optional<PointCounterexample> counterexample;
    bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Checks gamma o phi_{J,A} == (sigma_B o phi_{K,B}) o gamma on every
/// periodic point of period <= m_max; stops at the first counterexample.
Prop22Report verify_prop22(const HalfElemCert& cert, std::size_t m_max);

struct StrongChain {
    std::vector<FlipPair> pairs;      // lag + 1 pairs
    std::vector<HalfElemCert> links;  // link i: pairs[i] -> pairs[i+1]

    std::size_t lag() const noexcept { return links.size(); }
};

/// A single-pair chain of lag 0.
StrongChain trivial_chain(const FlipPair& p);

/// Appends `tail` (whose first pair must equal this chain's last pair).
StrongChain concat_chains(const StrongChain& head, const StrongChain& tail);

/// The same chain traversed backwards; each link (R, S) becomes (S, R).
StrongChain reversed_chain(const StrongChain& chain);

struct SseReport {
    bool passed = false;
    std::size_t lag = 0;
    std::optional<std::size_t> failed_link;
    std::string failure;
    /// Conjugacy consequence (even lag: flip systems conjugate; odd lag:
    /// conjugate to the shifted flip sigma_B o phi_{K,B}).
    std::string conclusion;
};

/// Re-checks every link with he_check.
SseReport sse_verify(const StrongChain& chain);

/// gamma of every link applied in order.
PeriodicPoint chain_gamma(const StrongChain& chain, const PeriodicPoint& x);

struct ShiftFlipCert {
    FlipPair source;
    FlipPair target;
    IntMatrix R;
    IntMatrix S;
    std::size_t lag = 0;
};

/// Derives S = K R^T J and checks A^k = RS, B^k = SR, AR = RB. Also checks
/// the consequence SA = BS and throws std::logic_error if it ever fails.
ShiftFlipCert sfe_check(const FlipPair& src, const FlipPair& dst, const IntMatrix& R, std::size_t lag,
                        const std::optional<IntMatrix>& supplied_S = std::nullopt);

struct SfeSearchOptions {
    std::size_t lag_max = 1;
    std::size_t entry_max = 1;
    std::size_t node_budget = kDefaultSfeNodeBudget;
    std::size_t max_solutions = 1000;
};

/// Exhaustive search over R with entries in [0, entry_max] for each lag
/// 1..lag_max. An empty result means "none within bounds", nothing more.
std::vector<ShiftFlipCert> sfe_bounded_search(const FlipPair& src, const FlipPair& dst, const SfeSearchOptions& options);

}  // namespace shiftflip

#endif  // SHIFTFLIP_EQUIVALENCE_HPP
