#include <benchmark/benchmark.h>

#include "shiftflip/equivalence.hpp"
#include "shiftflip/paper_examples.hpp"

namespace shiftflip {
namespace {

// Exhausts the space: Example 1 has no half elementary move onto (A, I).
void BM_HeSearchExample1(benchmark::State& state) {
    const FlipPair src = example1_pair();
    const FlipPair dst = example1_identity_pair();
    for (auto _ : state) benchmark::DoNotOptimize(he_search(src, dst, 1));
}
BENCHMARK(BM_HeSearchExample1);

void BM_HeSearchGoldenSelf(benchmark::State& state) {
    const FlipPair g = golden_mean_pair();
    for (auto _ : state) benchmark::DoNotOptimize(he_search(g, g, 16));
}
BENCHMARK(BM_HeSearchGoldenSelf);

}  // namespace
}  // namespace shiftflip

BENCHMARK_MAIN();
