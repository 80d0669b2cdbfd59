// Microbenchmarks over synthetic pulse trains of growing size.
#include <benchmark/benchmark.h>

#include "sigdelay/elements.hpp"

using namespace sigdelay;

namespace {

// n pulses [4k, 4k+2) plus jitter so endpoints are non-integral rationals
Signal pulse_train(int n) {
  IntervalSet ones;
  for (int k = 0; k < n; ++k)
    ones.push_back({Rat(4 * k) + Rat(k % 3, 7), Rat(4 * k + 2) + Rat(k % 5, 9)});
  return make_signal(ones);
}

void BM_Erode(benchmark::State& state) {
  Signal u = pulse_train(static_cast<int>(state.range(0)));
  WindowSpec w{Rat(5, 2), Rat(3, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(erode(u, w));
  state.SetComplexityN(state.range(0));
}

void BM_Dilate(benchmark::State& state) {
  Signal u = pulse_train(static_cast<int>(state.range(0)));
  WindowSpec w{Rat(5, 2), Rat(3, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(dilate(u, w));
  state.SetComplexityN(state.range(0));
}

void BM_SolveDridc(benchmark::State& state) {
  Signal u = pulse_train(static_cast<int>(state.range(0)));
  BdcParams p{1, 2, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(solve_dridc(u, p));
  state.SetComplexityN(state.range(0));
}

void BM_CheckBdc(benchmark::State& state) {
  Signal u = pulse_train(static_cast<int>(state.range(0)));
  BdcParams p{1, 3, 1, 3};
  Signal x = solve_dridc(u, p);
  for (auto _ : state) benchmark::DoNotOptimize(check_bdc(u, p, x));
  state.SetComplexityN(state.range(0));
}

void BM_ChainApply(benchmark::State& state) {
  Signal u = pulse_train(static_cast<int>(state.range(0)));
  std::vector<DelayElement> chain = {DelayElement::dride({1, 2, 1, 2}),
                                     DelayElement::fixed(Rat(3, 2)),
                                     DelayElement::dride({2, 3, 2, 3})};
  for (auto _ : state) benchmark::DoNotOptimize(chain_apply(chain, u, 0));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Erode)->RangeMultiplier(4)->Range(8, 2048)->Complexity();
BENCHMARK(BM_Dilate)->RangeMultiplier(4)->Range(8, 2048)->Complexity();
BENCHMARK(BM_SolveDridc)->RangeMultiplier(4)->Range(8, 2048)->Complexity();
BENCHMARK(BM_CheckBdc)->RangeMultiplier(4)->Range(8, 2048)->Complexity();
BENCHMARK(BM_ChainApply)->RangeMultiplier(4)->Range(8, 512)->Complexity();

BENCHMARK_MAIN();
