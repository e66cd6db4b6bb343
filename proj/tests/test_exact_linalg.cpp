#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shiftflip/error.hpp"
#include "shiftflip/exact_linalg.hpp"
#include "shiftflip/paper_examples.hpp"

namespace shiftflip {
namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> entry(lo, hi);
    IntMatrix m(numbered_labels(rows), numbered_labels(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
    return m;
}

const IntMatrix kGolden = IntMatrix::square({{1, 1}, {1, 0}});

TEST(MatMul, IdentityIsNeutral) {
    const IntMatrix M = IntMatrix::square({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    EXPECT_EQ(mat_mul(IntMatrix::identity(M.row_labels()), M), M);
}

TEST(MatMul, Example1SquareIsTwiceParityMatrix) {
    const IntMatrix A = ExampleFixtures::embedded().e1_A;
    IntMatrix expected(A.row_labels(), A.col_labels());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expected(i, j) = (i % 2 == j % 2) ? 2 : 0;
    EXPECT_EQ(mat_mul(A, A), expected);
}

TEST(MatMul, GoldenMeanSquared) { EXPECT_EQ(mat_mul(kGolden, kGolden), IntMatrix::square({{2, 1}, {1, 1}})); }

TEST(MatMul, RejectsShapeAndLabelMismatch) {
    const IntMatrix a(numbered_labels(2), numbered_labels(3));
    const IntMatrix b(numbered_labels(2), numbered_labels(2));
    EXPECT_THROW(mat_mul(a, b), InputError);
    const IntMatrix c(Labels{"x", "y", "z"}, numbered_labels(2));
    EXPECT_THROW(mat_mul(a, c), InputError);
}

TEST(MatMul, AgreesWithTripleLoop) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const IntMatrix a = random_matrix(rng, 3, 4, -5, 5);
        const IntMatrix b = random_matrix(rng, 4, 2, -5, 5);
        EXPECT_EQ(mat_mul(a, b), oracle::naive_mul(a, b));
    }
}

TEST(MatPow, ZerothPowerIsIdentity) {
    EXPECT_EQ(mat_pow(kGolden, 0), IntMatrix::identity(kGolden.row_labels()));
}

TEST(MatPow, Example1Traces) {
    const IntMatrix A = ExampleFixtures::embedded().e1_A;
    EXPECT_EQ(trace(mat_pow(A, 2)), 8);
    EXPECT_EQ(trace(mat_pow(A, 4)), 32);
}

TEST(MatPow, RejectsNonSquare) { EXPECT_THROW(mat_pow(IntMatrix(numbered_labels(2), numbered_labels(3)), 2), InputError); }

TEST(MatPow, LargePowersStayExact) {
    // F_{101} overflows 64 bits.
    const IntMatrix P = mat_pow(kGolden, 100);
    EXPECT_EQ(P(0, 0).get_str(), "573147844013817084101");
}

TEST(MatPowProperty, AdditiveInExponent) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const IntMatrix a = random_matrix(rng, 5, 5, -2, 3);
        for (std::size_t j = 0; j <= 6; ++j)
            for (std::size_t k = 0; k <= 6; ++k) ASSERT_EQ(mat_pow(a, j + k), mat_mul(mat_pow(a, j), mat_pow(a, k)));
    }
}

TEST(Trace, Examples) {
    EXPECT_EQ(trace(IntMatrix::identity(numbered_labels(5))), 5);
    EXPECT_EQ(trace(ExampleFixtures::embedded().e1_A), 0);
    // Every diagonal entry of the printed matrix is 1; agrees with the t^6 coefficient -7.
    EXPECT_EQ(trace(ExampleFixtures::embedded().e2_A), 7);
    EXPECT_THROW(trace(IntMatrix(numbered_labels(1), numbered_labels(2))), InputError);
}

TEST(TraceProperty, CommutesUnderProduct) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const IntMatrix a = random_matrix(rng, 3, 5, -4, 4);
        const IntMatrix b = random_matrix(rng, 5, 3, -4, 4);
        ASSERT_EQ(trace(mat_mul(a, b)), trace(mat_mul(b, a)));
    }
}

TEST(Delta, Examples) {
    const IntMatrix zero(numbered_labels(3), numbered_labels(3));
    EXPECT_EQ(delta(zero).entries, std::vector<Integer>(3, 0));
    EXPECT_EQ(delta(ExampleFixtures::embedded().e1_J).entries, std::vector<Integer>(4, 0));
    const IntVector d = delta(ExampleFixtures::embedded().e2_J);
    EXPECT_EQ(d.entries, (std::vector<Integer>{1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(d.labels, numbered_labels(7));
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(IntMatrix::identity(numbered_labels(2))), (IntPolynomial{1, -2, 1}));
    EXPECT_EQ(char_poly(kGolden), (IntPolynomial{-1, -1, 1}));
    EXPECT_EQ(char_poly(kGolden).to_string(), "t^2 - t - 1");
    EXPECT_EQ(char_poly(ExampleFixtures::embedded().e2_A), example2_charpoly());
    EXPECT_EQ(char_poly(IntMatrix(Labels{}, Labels{})), IntPolynomial{1});
    EXPECT_THROW(char_poly(IntMatrix(numbered_labels(2), numbered_labels(3))), InputError);
}

TEST(CharPoly, Example2ExpandsFactoredForm) {
    EXPECT_EQ(example2_charpoly().to_string(), "t^7 - 7t^6 + 19t^5 - 26t^4 + 19t^3 - 7t^2 + t");
}

TEST(CharPolyOracle, MatchesInterpolatedDeterminant) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const IntMatrix a = random_matrix(rng, n, n, -6, 6);
            ASSERT_EQ(char_poly(a).coefficients(), oracle::char_poly_by_interpolation(a)) << "n = " << n;
        }
    }
}

TEST(CharPolyProperty, CayleyHamilton) {
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n <= 7; ++n) {
        const IntMatrix a = random_matrix(rng, n, n, -3, 3);
        const IntMatrix z = evaluate_at(char_poly(a), a);
        ASSERT_EQ(z, IntMatrix(a.row_labels(), a.col_labels())) << "n = " << n;
    }
    const ExampleFixtures f = ExampleFixtures::embedded();
    for (const IntMatrix* m : {&f.e2_A, &f.e2_B, &f.e2_C}) {
        EXPECT_EQ(evaluate_at(char_poly(*m), *m), IntMatrix(m->row_labels(), m->col_labels()));
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank_over_rationals(IntMatrix(numbered_labels(3), numbered_labels(4))), 0U);
    const ExampleFixtures f = ExampleFixtures::embedded();
    const IntMatrix I = IntMatrix::identity(numbered_labels(7));
    EXPECT_EQ(rank_over_rationals(f.e2_A - I), 6U);
    EXPECT_EQ(rank_over_rationals(f.e2_C - I), 5U);
}

TEST(RankOracle, MatchesReversedPivotElimination) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 6;
        const std::size_t cols = 1 + (trial / 6) % 6;
        // Low-rank products make rank deficiency common.
        const std::size_t inner = 1 + trial % 3;
        const IntMatrix a = mat_mul(random_matrix(rng, rows, inner, -3, 3), random_matrix(rng, inner, cols, -3, 3));
        const IntMatrix b = random_matrix(rng, rows, cols, -1, 1);
        for (const IntMatrix* m : {&a, &b}) {
            const std::size_t rank = rank_over_rationals(*m);
            ASSERT_EQ(rank, oracle::rank_right_to_left(*m));
            ASSERT_LE(rank, std::min(rows, cols));
        }
    }
}

TEST(RankProfile, Example2DistinguishesC) {
    const ExampleFixtures f = ExampleFixtures::embedded();
    EXPECT_EQ(rank_profile(f.e2_A, 1, 4), (std::vector<std::size_t>{6, 5, 4, 3}));
    EXPECT_EQ(rank_profile(f.e2_B, 1, 4), (std::vector<std::size_t>{6, 5, 4, 3}));
    EXPECT_EQ(rank_profile(f.e2_C, 1, 4), (std::vector<std::size_t>{5, 3, 3, 3}));
}

TEST(JordanBlocks, FromStabilisedProfile) {
    EXPECT_EQ(jordan_block_sizes(7, std::vector<std::size_t>{6, 5, 4, 3, 3}), (std::vector<std::size_t>{4}));
    EXPECT_EQ(jordan_block_sizes(7, std::vector<std::size_t>{5, 3, 3}), (std::vector<std::size_t>{2, 2}));
    EXPECT_THROW(jordan_block_sizes(7, std::vector<std::size_t>{6, 5, 4, 3}), InputError);
}

TEST(IntMatrix, ConstructionValidatesLabels) {
    EXPECT_THROW(IntMatrix(Labels{"a", "a"}, Labels{"b"}), InputError);
    EXPECT_THROW(IntMatrix(Labels{"a"}, Labels{"b"}, std::vector<Integer>{1, 2}), InputError);
    const IntMatrix m = IntMatrix::square(Labels{"x", "y"}, {{0, 1}, {1, 0}});
    EXPECT_EQ(m.at("x", "y"), 1);
    EXPECT_TRUE(m.is_zero_one());
    EXPECT_TRUE(m.is_symmetric());
    EXPECT_THROW((void)m.at("x", "z"), InputError);
}

}  // namespace
}  // namespace shiftflip
