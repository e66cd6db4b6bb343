#ifndef SHIFTFLIP_PAPER_EXAMPLES_HPP
#define SHIFTFLIP_PAPER_EXAMPLES_HPP

// The two worked examples: a 4-symbol pair (A, J) that is shift-flip
// equivalent to (A, I) while their Lind zeta functions differ, and three
// 7-symbol pairs (A, J), (B, J), (C, J) with equal Lind zeta functions whose
// matrices have different Jordan structure at eigenvalue 1.

#include <string>
#include <vector>

#include "shiftflip/flip_pair.hpp"
#include "shiftflip/power_series.hpp"
#include "shiftflip/zeta.hpp"

namespace shiftflip {

struct ExampleFixtures {
    IntMatrix e1_A;
    IntMatrix e1_J;
    IntMatrix e2_A;
    IntMatrix e2_B;
    IntMatrix e2_C;
    IntMatrix e2_J;

    static ExampleFixtures embedded();
};

/// The golden mean shift [[1, 1], [1, 0]] with J = I.
FlipPair golden_mean_pair();

FlipPair example1_pair(const ExampleFixtures& f = ExampleFixtures::embedded());           // (A, J)
FlipPair example1_identity_pair(const ExampleFixtures& f = ExampleFixtures::embedded());  // (A, I)
/// which = 'A', 'B' or 'C'.
FlipPair example2_pair(char which, const ExampleFixtures& f = ExampleFixtures::embedded());

/// t (t - 1)^4 (t^2 - 3t + 1).
IntPolynomial example2_charpoly();

/// Closed forms in lambda, mu (roots of t^2 - 3t + 1), evaluated through
/// s_k = lambda^k / (11 lambda - 4) + mu^k / (11 mu - 4), which satisfies
/// s_{k+1} = 3 s_k - s_{k-1}, s_0 = 5, s_1 = 2:
///   p_{2m-1,0} = 8 s_m - 3 s_{m-1},  p_{2m,0} = s_{m+1},  p_{2m,1} = 55 s_m - 21 s_{m-1}.
FlipCountTriple example2_closed_form(std::size_t m);

/// 4t^2 / (1 - 2t^2).
TruncatedSeries example1_identity_generating_function(std::size_t order);

struct ExampleRow {
    std::string id;
    std::string expected;
    std::string computed;
    bool passed = false;
};

struct ExampleOptions {
    std::size_t order = kDefaultSeriesOrder;
    std::size_t m_max = 4;
    bool run_search = true;
};

/// Expected-vs-computed rows for both examples. A row whose computation
/// throws is reported as failed with the error text.
std::vector<ExampleRow> run_paper_examples(const ExampleFixtures& fixtures, const ExampleOptions& options = {});

std::string format_coefficients(const TruncatedSeries& s);

}  // namespace shiftflip

#endif  // SHIFTFLIP_PAPER_EXAMPLES_HPP
