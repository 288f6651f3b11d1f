#include <benchmark/benchmark.h>

#include "meyerap/aprank.hpp"

using namespace meyerap;

namespace {

Window unit_interval() { return Window::interval(QuadScalar(0), QuadScalar(1)); }

void BM_EnumerateFibonacci(benchmark::State& state) {
  const auto fib = builtin("fibonacci");
  const Region region = Region::centered(1, Rational(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_model_set(fib, unit_interval(), region));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateFibonacci)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_EnumerateAmmannBeenker(benchmark::State& state) {
  const auto ab = builtin("ammann_beenker");
  const Window w = Window::closed_box({QuadScalar(Rational(-1, 2)), QuadScalar(Rational(-1, 2))},
                                      {QuadScalar(Rational(1, 2)), QuadScalar(Rational(1, 2))});
  const Region region = Region::centered(2, Rational(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_model_set(ab, w, region));
}
BENCHMARK(BM_EnumerateAmmannBeenker)->Arg(4)->Arg(8)->Arg(16);

void BM_FindMonoGrid(benchmark::State& state) {
  // Thue-Morse coloring avoids short progressions for as long as possible.
  const std::size_t side = static_cast<std::size_t>(state.range(0));
  std::vector<std::uint32_t> colors(side + 1);
  for (std::size_t i = 0; i <= side; ++i) colors[i] = static_cast<std::uint32_t>(__builtin_popcountll(i) % 2);
  const CubeColoring c(side, 1, 2, colors);
  for (auto _ : state) benchmark::DoNotOptimize(find_mono_grid(c, 3));
}
BENCHMARK(BM_FindMonoGrid)->Arg(32)->Arg(128)->Arg(512);

void BM_LiApInModelSet(benchmark::State& state) {
  const auto fib = builtin("fibonacci");
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(li_ap_in_model_set(fib, unit_interval(), n, {QuadScalar(100)}));
}
BENCHMARK(BM_LiApInModelSet)->Arg(1)->Arg(3)->Arg(8);

void BM_CrtCoefficients(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(crt_coefficients(static_cast<std::size_t>(state.range(0)), 50));
}
BENCHMARK(BM_CrtCoefficients)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
