#include <benchmark/benchmark.h>

#include "shiftflip/corpus.hpp"
#include "shiftflip/exact_linalg.hpp"
#include "shiftflip/paper_examples.hpp"

namespace shiftflip {
namespace {

void BM_CharPolyExample2(benchmark::State& state) {
    const IntMatrix C = ExampleFixtures::embedded().e2_C;
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(C));
}
BENCHMARK(BM_CharPolyExample2);

void BM_CharPolyRandom(benchmark::State& state) {
    Rng rng(7);
    const FlipPair p = random_flip_pair(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(p.A()));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CharPolyRandom)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_MatPow(benchmark::State& state) {
    const IntMatrix A = example1_pair().A();
    for (auto _ : state) benchmark::DoNotOptimize(mat_pow(A, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MatPow)->Arg(16)->Arg(128)->Arg(1024);

}  // namespace
}  // namespace shiftflip
