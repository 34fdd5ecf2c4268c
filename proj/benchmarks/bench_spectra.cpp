#include <benchmark/benchmark.h>

#include <chainent/spectra.hpp>
#include <chainent/xy.hpp>

namespace {

using namespace chainent;

xy::ModeOccupations critical_modes(int block) {
  const auto couplings =
      xy::coupling_coefficients(xy::XYModel(1.0, 1.0), block - 1);
  return xy::mode_occupations(xy::block_correlation(couplings, block));
}

void BM_FullSpectrum(benchmark::State& state) {
  const auto modes = critical_modes(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectra::reduced_spectrum_full(modes));
  }
}
BENCHMARK(BM_FullSpectrum)->Arg(12)->Arg(16)->Arg(20);

void BM_TopkSpectrum(benchmark::State& state) {
  const auto modes = critical_modes(40);
  const auto k = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectra::reduced_spectrum_topk(modes, k));
  }
}
BENCHMARK(BM_TopkSpectrum)->Arg(64)->Arg(1024)->Arg(16384);

void BM_Majorization(benchmark::State& state) {
  const auto block = static_cast<int>(state.range(0));
  const auto coarse = spectra::reduced_spectrum_full(critical_modes(block));
  const auto fine = spectra::reduced_spectrum_full(critical_modes(block + 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectra::majorization_compare(coarse, fine));
  }
}
BENCHMARK(BM_Majorization)->Arg(11)->Arg(15)->Arg(17);

}  // namespace

BENCHMARK_MAIN();
