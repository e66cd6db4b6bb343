#include <benchmark/benchmark.h>

#include "shiftflip/markov_shift.hpp"
#include "shiftflip/paper_examples.hpp"
#include "shiftflip/zeta.hpp"

namespace shiftflip {
namespace {

void BM_EnumeratePeriodic(benchmark::State& state) {
    const IntMatrix A = golden_mean_pair().A();
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_periodic(A, m));
}
BENCHMARK(BM_EnumeratePeriodic)->DenseRange(4, 12, 4);

void BM_FlipCountsClosedForm(benchmark::State& state) {
    const FlipPair p = example2_pair('C');
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(p_flip_counts(p, m));
}
BENCHMARK(BM_FlipCountsClosedForm)->Arg(4)->Arg(32)->Arg(256);

void BM_FlipCountsBruteForce(benchmark::State& state) {
    const FlipPair p = example2_pair('C');
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(p_flip_counts_bruteforce(p, m));
}
BENCHMARK(BM_FlipCountsBruteForce)->DenseRange(1, 4);

void BM_LindZeta(benchmark::State& state) {
    const FlipPair p = example1_pair();
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lind_zeta(p, order));
}
BENCHMARK(BM_LindZeta)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
}  // namespace shiftflip
