#ifndef SHIFTFLIP_ZETA_HPP
#define SHIFTFLIP_ZETA_HPP

// Closed-form flip-fixed point counts and the zeta functions built on them.
//
// For a flip pair (A, J), with Delta_M the diagonal of M:
//
//   p_{2m-1,0} = Delta_J^T  A^{m-1} Delta_AJ
//   p_{2m,0}   = Delta_J^T  A^m     Delta_J
//   p_{2m,1}   = Delta_JA^T A^{m-1} Delta_AJ
//
// The generating function packages these as
//
//   G(t) = sum_m p_{2m-1,0} t^{2m-1} + (p_{2m,0} + p_{2m,1})/2 t^{2m}
//
// and the Lind zeta function of the D_inf action generated by (sigma_A, phi)
// is zeta_T(t^2)^{1/2} exp(G(t)), where zeta_T is the Artin-Mazur zeta
// function exp(sum_n tr(A^n) t^n / n). The square root is never taken: the
// series is assembled as exp(1/2 sum_n tr(A^n) t^{2n} / n + G(t)), which is
// the same power series.

#include <cstddef>
#include <string>
#include <vector>

#include "shiftflip/flip_pair.hpp"
#include "shiftflip/markov_shift.hpp"
#include "shiftflip/power_series.hpp"

namespace shiftflip {

struct FlipCountTriple {
    std::size_t m = 0;
    Integer p_odd;    // p_{2m-1,0}
    Integer p_even0;  // p_{2m,0}
    Integer p_even1;  // p_{2m,1}

    friend bool operator==(const FlipCountTriple&, const FlipCountTriple&) = default;
};

/// The three bilinear forms above, m >= 1.
FlipCountTriple p_flip_counts(const FlipPair& p, std::size_t m);

/// The same triple counted by brute force (enumeration of periodic points).
FlipCountTriple p_flip_counts_bruteforce(const FlipPair& p, std::size_t m, const EnumerationLimits& limits = {});

TruncatedSeries generating_function(const FlipPair& p, std::size_t order = kDefaultSeriesOrder);

TruncatedSeries artin_mazur_zeta(const IntMatrix& A, std::size_t order = kDefaultSeriesOrder);

TruncatedSeries lind_zeta(const FlipPair& p, std::size_t order = kDefaultSeriesOrder);

/// One identity of the flip-shift symmetry p_{m,n}(T, T o phi) = p_{m,n+1}(T, phi).
struct Prop31Row {
    std::size_t m = 0;
    std::string identity;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    bool holds() const noexcept { return lhs == rhs; }
};

struct Prop31Report {
    std::vector<Prop31Row> rows;
    bool passed() const;
};

/// For 1 <= m <= m_max checks, by brute force:
///   p_{2m-1,0}(T, phi) = p_{2m-1,0}(T, T o phi)
///   p_{2m,0}(T, phi)   = p_{2m,1}(T, T o phi)
///   p_{2m,1}(T, phi)   = p_{2m,0}(T, T o phi)
Prop31Report verify_prop31(const FlipPair& p, std::size_t m_max, const EnumerationLimits& limits = {});

}  // namespace shiftflip

#endif  // SHIFTFLIP_ZETA_HPP
