#include <benchmark/benchmark.h>

#include <chainent/xy.hpp>

namespace {

using namespace chainent;

void BM_CouplingQuadrature(benchmark::State& state) {
  const xy::XYModel model(0.5, 0.5);
  const int max_lag = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        xy::coupling_coefficients_quadrature(model, max_lag));
  }
}
BENCHMARK(BM_CouplingQuadrature)->Arg(10)->Arg(50)->Arg(100);

void BM_ModeOccupations(benchmark::State& state) {
  const xy::XYModel model(1.0, 1.0);
  const int block = static_cast<int>(state.range(0));
  const auto couplings = xy::coupling_coefficients(model, block - 1);
  const auto correlation = xy::block_correlation(couplings, block);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xy::mode_occupations(correlation));
  }
}
BENCHMARK(BM_ModeOccupations)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_EntropyProfile(benchmark::State& state) {
  const xy::XYModel model(1.0, 1.0);
  const int max_block = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xy::entropy_profile(model, max_block));
  }
}
BENCHMARK(BM_EntropyProfile)->Arg(25)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
