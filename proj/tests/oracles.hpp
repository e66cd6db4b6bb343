#ifndef SHIFTFLIP_TESTS_ORACLES_HPP
#define SHIFTFLIP_TESTS_ORACLES_HPP

// Independent reference computations. None of these call the library's
// algorithms; they use the slowest obviously-correct method available.

#include <cstddef>
#include <vector>

#include "shiftflip/equivalence.hpp"
#include "shiftflip/flip_pair.hpp"
#include "shiftflip/power_series.hpp"

namespace shiftflip::oracle {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& m);

/// Determinant by Gaussian elimination over Q, pivoting on the first nonzero row.
Rational determinant(RationalMatrix m);

/// det(tI - A) by evaluating at t = 0..n and Lagrange interpolation.
std::vector<Integer> char_poly_by_interpolation(const IntMatrix& A);

/// Rank by Gauss-Jordan over Q scanning columns right to left.
std::size_t rank_right_to_left(const IntMatrix& m);

/// Plain triple-loop product (no label checks).
IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b);

/// Number of words x_0..x_{m-1} over the full alphabet with A(x_i, x_{i+1 mod m}) = 1,
/// found by trying all n^m words.
std::size_t count_cycles_exhaustive(const IntMatrix& A, std::size_t m);

/// Same enumeration, counting words with tau(x_{(-i-n) mod m}) = x_i for all i.
std::size_t count_pmn_exhaustive(const FlipPair& p, std::size_t m, long n);

/// Truncated Cauchy product by the defining double sum.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t order);

/// exp(a) by the power sum 1 + a + a^2/2! + ... (a has zero constant term).
std::vector<Rational> exp_by_powers(const std::vector<Rational>& a, std::size_t order);

/// Coefficients of (1 - c t^step)^(-1/2) from the binomial series.
std::vector<Rational> inverse_sqrt_binomial(const Rational& c, std::size_t step, std::size_t order);

/// All zero-one R (|src| x |dst|) with A = R S, B = S R and S = K R^T J, by
/// trying all 2^(|src| |dst|) matrices in lexicographic order.
std::vector<IntMatrix> he_solutions_exhaustive(const FlipPair& src, const FlipPair& dst);

}  // namespace shiftflip::oracle

#endif  // SHIFTFLIP_TESTS_ORACLES_HPP
