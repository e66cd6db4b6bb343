#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "shiftflip/constructions.hpp"
#include "shiftflip/corpus.hpp"
#include "shiftflip/equivalence.hpp"
#include "shiftflip/error.hpp"
#include "shiftflip/paper_examples.hpp"

namespace shiftflip {
namespace {

FlipPair one_point_pair() { return validate_flip_pair(IntMatrix::square({{1}}), IntMatrix::square({{1}}), "point"); }

std::string he_failure(const FlipPair& src, const FlipPair& dst, const IntMatrix& R) {
    try {
        he_check(src, dst, R);
    } catch (const CheckFailure& e) {
        return e.identity();
    }
    return "";
}

IntMatrix relabel_link(const FlipPair& src, const FlipPair& dst, const IntMatrix& m) {
    return m.relabeled(src.alphabet(), dst.alphabet());
}

TEST(HeCheck, OnePoint) {
    const FlipPair p = one_point_pair();
    const HalfElemCert c = he_check(p, p, IntMatrix::square({{1}}));
    EXPECT_EQ(c.S, IntMatrix::square({{1}}));
}

TEST(HeCheck, HigherBlockLinksAreValid) {
    const HigherBlockResult hb = higher_block(golden_mean_pair(), 2);
    ASSERT_EQ(hb.chain.lag(), 2U);
    for (const HalfElemCert& link : hb.chain.links) EXPECT_NO_THROW(he_check(link.source, link.target, link.R));
}

TEST(HeCheck, ExampleOneNeedsLagTwo) {
    const FlipPair src = example1_pair();
    const FlipPair dst = example1_identity_pair();
    EXPECT_EQ(he_failure(src, dst, relabel_link(src, dst, src.A())), "A = RS");
}

TEST(HeCheck, RejectsBadShapesAndEntries) {
    const FlipPair g = golden_mean_pair();
    EXPECT_THROW(he_check(g, g, IntMatrix(g.alphabet(), numbered_labels(3))), InputError);
    EXPECT_EQ(he_failure(g, g, IntMatrix::square(g.alphabet(), {{2, 0}, {0, 1}})), "R zero-one");
}

TEST(HeCheck, SuppliedSMustMatch) {
    const HigherBlockResult hb = higher_block(golden_mean_pair(), 1);
    const HalfElemCert& link = hb.chain.links[0];
    EXPECT_NO_THROW(he_check(link.source, link.target, link.R, link.S));
    IntMatrix wrong = link.S;
    wrong(0, 0) = wrong(0, 0) == 0 ? 1 : 0;
    try {
        he_check(link.source, link.target, link.R, wrong);
        FAIL() << "corrupted S accepted";
    } catch (const CheckFailure& e) {
        EXPECT_EQ(e.identity(), "S = KR^TJ");
    }
}

TEST(HeSearch, Examples) {
    const FlipPair p = one_point_pair();
    const std::vector<HalfElemCert> one = he_search(p, p, 10);
    ASSERT_EQ(one.size(), 1U);
    EXPECT_EQ(one[0].R, IntMatrix::square({{1}}));

    const HigherBlockResult hb = higher_block(golden_mean_pair(), 1);
    const std::vector<HalfElemCert> found = he_search(golden_mean_pair(), hb.pair, 100);
    const IntMatrix& structural = hb.chain.links[0].R;
    EXPECT_TRUE(std::any_of(found.begin(), found.end(), [&](const HalfElemCert& c) { return c.R == structural; }));

    EXPECT_TRUE(he_search(example1_pair(), example1_identity_pair(), 100).empty());
}

TEST(HeSearch, BudgetAndLimit) {
    const FlipPair e2 = example2_pair('A');
    EXPECT_THROW(he_search(e2, e2, 1), BudgetExceeded);
    const FlipPair g = golden_mean_pair();
    const HigherBlockResult hb = higher_block(g, 1);
    EXPECT_LE(he_search(g, hb.pair, 1).size(), 1U);
    EXPECT_TRUE(he_search(g, hb.pair, 0).empty());
}

TEST(HeSearch, MatchesExhaustiveEnumeration) {
    std::vector<FlipPair> small;
    for (const FlipPair& p : random_flip_corpus(51, 40, 3)) small.push_back(p);
    small.push_back(golden_mean_pair());
    small.push_back(one_point_pair());
    std::size_t total = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = 0; j < small.size(); j += 3) {
            const FlipPair& src = small[i];
            const FlipPair& dst = small[j];
            const std::vector<IntMatrix> expected = oracle::he_solutions_exhaustive(src, dst);
            const std::vector<HalfElemCert> got = he_search(src, dst, 1'000'000);
            ASSERT_EQ(got.size(), expected.size()) << i << " -> " << j;
            for (std::size_t k = 0; k < got.size(); ++k) {
                ASSERT_TRUE(got[k].R.same_entries(expected[k]));
                ASSERT_NO_THROW(he_check(src, dst, got[k].R));
            }
            total += got.size();
        }
    }
    EXPECT_GT(total, 0U);
}

TEST(Gamma, Examples) {
    const FlipPair p = one_point_pair();
    const HalfElemCert point = he_check(p, p, IntMatrix::square({{1}}));
    EXPECT_EQ(gamma_block(point, 0, 0), 0U);
    EXPECT_EQ(gamma_point(point, PeriodicPoint{{0, 0, 0}}), (PeriodicPoint{{0, 0, 0}}));

    const FlipPair g = golden_mean_pair();
    const HigherBlockResult hb = higher_block(g, 1);
    const HalfElemCert& link = hb.chain.links[0];
    const PeriodicPoint y = gamma_point(link, PeriodicPoint{{0, 1}});
    ASSERT_EQ(y.period(), 2U);
    EXPECT_EQ(hb.pair.alphabet()[y.symbols[0]], "12");
    EXPECT_EQ(hb.pair.alphabet()[y.symbols[1]], "21");
    EXPECT_EQ(hb.pair.alphabet()[gamma_block(link, 0, 0)], "11");
    EXPECT_THROW(gamma_block(link, 1, 1), InputError);
}

TEST(Gamma, IdentityLinkKeepsFirstSymbol) {
    // Full 2-shift with R = I, S = A: the products hold, the flip condition does not.
    const FlipPair full = validate_flip_pair(IntMatrix::square({{1, 1}, {1, 1}}), IntMatrix::identity(numbered_labels(2)));
    const HalfElemCert c{full, full, IntMatrix::identity(full.alphabet()), full.A()};
    EXPECT_EQ(gamma_block(c, 1, 0), 1U);
    EXPECT_EQ(gamma_point(c, PeriodicPoint{{0, 1, 1}}), (PeriodicPoint{{0, 1, 1}}));
}

TEST(FlipIntertwining, HigherBlockLinksPass) {
    EXPECT_TRUE(verify_prop22(he_check(one_point_pair(), one_point_pair(), IntMatrix::square({{1}})), 4).passed());
    for (const HalfElemCert& link : higher_block(golden_mean_pair(), 2).chain.links) {
        const Prop22Report r = verify_prop22(link, 5);
        EXPECT_TRUE(r.passed());
        EXPECT_GT(r.points_checked, 0U);
    }
}

TEST(FlipIntertwining, LocalisesFailureOfAnInconsistentCertificate) {
    // A = RS and B = SR hold but S != K R^T J.
    const IntMatrix A = IntMatrix::square({{1, 1}, {1, 1}});
    const FlipPair src = validate_flip_pair(A, IntMatrix::identity(A.row_labels()));
    const FlipPair dst = validate_flip_pair(A, IntMatrix::square({{0, 1}, {1, 0}}));
    const HalfElemCert bogus{src, dst, IntMatrix::identity(A.row_labels()), A};
    const Prop22Report r = verify_prop22(bogus, 3);
    ASSERT_FALSE(r.passed());
    EXPECT_NE(r.counterexample->lhs, r.counterexample->rhs);
    EXPECT_EQ(r.counterexample->point.period(), 1U);
}

TEST(SseVerify, Examples) {
    const SseReport trivial = sse_verify(trivial_chain(golden_mean_pair()));
    EXPECT_TRUE(trivial.passed);
    EXPECT_EQ(trivial.lag, 0U);

    const HigherBlockResult hb = higher_block(example1_pair(), 3);
    const SseReport ok = sse_verify(hb.chain);
    EXPECT_TRUE(ok.passed);
    EXPECT_EQ(ok.lag, 3U);

    StrongChain broken = hb.chain;
    IntMatrix& R = broken.links[1].R;
    R(0, 0) = R(0, 0) == 0 ? 1 : 0;
    const SseReport bad = sse_verify(broken);
    EXPECT_FALSE(bad.passed);
    ASSERT_TRUE(bad.failed_link.has_value());
    EXPECT_EQ(*bad.failed_link, 1U);
}

TEST(SseVerify, ReversedAndConcatenatedChains) {
    const FlipPair g = golden_mean_pair();
    const StrongChain forward = higher_block(g, 2).chain;
    const StrongChain back = reversed_chain(forward);
    EXPECT_TRUE(sse_verify(back).passed);
    EXPECT_EQ(back.pairs.front(), forward.pairs.back());
    const StrongChain loop = concat_chains(forward, back);
    EXPECT_EQ(loop.lag(), 4U);
    EXPECT_TRUE(sse_verify(loop).passed);
    // Up the block tower and back down is the shift by 2.
    for (std::size_t m = 1; m <= 6; ++m)
        for (const PeriodicPoint& x : enumerate_periodic(g.A(), m)) ASSERT_EQ(chain_gamma(loop, x), shift_point(x, 2));
}

TEST(SseProperty, ChainsPreserveTraces) {
    for (const FlipPair& p : random_flip_corpus(52, 20, 4)) {
        const HigherBlockResult hb = higher_block(p, 2);
        ASSERT_TRUE(sse_verify(hb.chain).passed);
        for (std::size_t m = 1; m <= 6; ++m) ASSERT_EQ(trace(mat_pow(p.A(), m)), trace(mat_pow(hb.pair.A(), m)));
    }
}

TEST(GammaProperty, BijectiveOnPeriodicPoints) {
    for (const FlipPair& p : random_flip_corpus(53, 20, 4)) {
        for (const HalfElemCert& link : higher_block(p, 1).chain.links) {
            for (std::size_t m = 1; m <= 6; ++m) {
                const std::vector<PeriodicPoint> pts = enumerate_periodic(link.source.A(), m);
                std::set<PeriodicPoint> images;
                for (const PeriodicPoint& x : pts) {
                    const PeriodicPoint y = gamma_point(link, x);
                    ASSERT_EQ(y.period(), m);
                    ASSERT_EQ(gamma_point(link, shift_point(x, 1)), shift_point(y, 1));
                    images.insert(y);
                }
                ASSERT_EQ(images.size(), pts.size());
                ASSERT_EQ(images.size(), enumerate_periodic(link.target.A(), m).size());
            }
        }
    }
}

TEST(DeriveProperty, SAndRDetermineEachOther) {
    Rng rng(54);
    std::bernoulli_distribution coin(0.4);
    const std::vector<FlipPair> corpus = random_flip_corpus(55, 12, 5);
    for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
        const FlipPair& src = corpus[i];
        const FlipPair& dst = corpus[i + 1];
        IntMatrix R(src.alphabet(), dst.alphabet());
        for (std::size_t r = 0; r < R.rows(); ++r)
            for (std::size_t c = 0; c < R.cols(); ++c) R(r, c) = coin(rng) ? 1 : 0;
        const IntMatrix S = derive_S(src, dst, R);
        EXPECT_EQ(derive_R(src, dst, S), R);
        for (Symbol a = 0; a < src.size(); ++a)
            for (Symbol b = 0; b < dst.size(); ++b) ASSERT_EQ(S(b, a), R(src.tau(a), dst.tau(b)));
    }
}

TEST(FlipPairAlgebra, ConjugationByJTransposes) {
    // J A J = A^T follows from AJ = JA^T and J^2 = I; it is what turns AR = RB into SA = BS.
    for (const FlipPair& p : random_flip_corpus(56, 30, 6)) {
        ASSERT_EQ(mat_mul(mat_mul(p.J(), p.A()), p.J()), p.A().transposed());
    }
}

TEST(SfeCheck, ExampleOne) {
    const FlipPair src = example1_pair();
    const FlipPair dst = example1_identity_pair();
    for (std::size_t k = 1; k <= 2; ++k) {
        const IntMatrix R = relabel_link(src, dst, mat_pow(src.A(), k));
        const ShiftFlipCert c = sfe_check(src, dst, R, 2 * k);
        EXPECT_TRUE(c.S.same_entries(mat_pow(src.A(), k)));
        EXPECT_EQ(mat_mul(c.S, src.A()), mat_mul(dst.A(), c.S));
    }
    try {
        sfe_check(src, dst, relabel_link(src, dst, src.A()), 1);
        FAIL() << "lag 1 accepted";
    } catch (const CheckFailure& e) {
        EXPECT_EQ(e.identity(), "A^k = RS");
    }
}

TEST(SfeCheck, OnePointAndInputErrors) {
    const FlipPair p = one_point_pair();
    EXPECT_NO_THROW(sfe_check(p, p, IntMatrix::square({{1}}), 1));
    EXPECT_THROW(sfe_check(p, p, IntMatrix::square({{1}}), 0), InputError);
    try {
        sfe_check(p, p, IntMatrix::square({{-1}}), 1);
        FAIL();
    } catch (const CheckFailure& e) {
        EXPECT_EQ(e.identity(), "R nonnegative");
    }
}

TEST(SfeSearch, Examples) {
    const FlipPair src = example1_pair();
    const FlipPair dst = example1_identity_pair();
    const std::vector<ShiftFlipCert> found = sfe_bounded_search(src, dst, SfeSearchOptions{2, 1});
    ASSERT_FALSE(found.empty());
    EXPECT_TRUE(std::any_of(found.begin(), found.end(), [&](const ShiftFlipCert& c) {
        return c.lag == 2 && c.R.same_entries(src.A()) && c.S.same_entries(src.A());
    }));
    for (const ShiftFlipCert& c : found) {
        EXPECT_EQ(c.lag, 2U);
        EXPECT_NO_THROW(sfe_check(src, dst, c.R, c.lag));
    }

    const FlipPair p = one_point_pair();
    const std::vector<ShiftFlipCert> point = sfe_bounded_search(p, p, SfeSearchOptions{1, 1});
    ASSERT_EQ(point.size(), 1U);
    EXPECT_EQ(point[0].R, IntMatrix::square({{1}}));

    EXPECT_TRUE(sfe_bounded_search(example2_pair('A'), example2_pair('C'), SfeSearchOptions{2, 1}).empty());
}

TEST(SfeSearch, ResultsSatisfyDerivedIdentity) {
    const std::vector<FlipPair> corpus = random_flip_corpus(57, 12, 3);
    for (const FlipPair& src : corpus) {
        for (const ShiftFlipCert& c : sfe_bounded_search(src, src, SfeSearchOptions{2, 2, kDefaultSfeNodeBudget, 50})) {
            ASSERT_EQ(mat_mul(c.S, src.A()), mat_mul(src.A(), c.S));
            ASSERT_EQ(mat_mul(c.R, c.S), mat_pow(src.A(), c.lag));
        }
    }
}

TEST(SfeSearch, NodeBudget) {
    SfeSearchOptions tight{2, 3};
    tight.node_budget = 10;
    EXPECT_THROW(sfe_bounded_search(example2_pair('A'), example2_pair('B'), tight), BudgetExceeded);
}

}  // namespace
}  // namespace shiftflip
