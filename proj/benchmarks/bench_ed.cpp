#include <benchmark/benchmark.h>

#include <chainent/ed.hpp>

namespace {

using namespace chainent;

void BM_GroundState(benchmark::State& state) {
  const ed::XXZModel model(1.0, 0.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ed::ground_state(model, {}));
  }
}
BENCHMARK(BM_GroundState)->Arg(10)->Arg(12)->Arg(14)->Arg(16)
    ->Unit(benchmark::kMillisecond);

void BM_BlockEntropy(benchmark::State& state) {
  const ed::XXZModel model(1.0, 0.0, 16);
  const auto ground = ed::ground_state(model, {});
  const int block = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ed::block_entropy(ground.state, block));
  }
}
BENCHMARK(BM_BlockEntropy)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_HamiltonianAction(benchmark::State& state) {
  const ed::XXZModel model(1.0, 0.0, static_cast<int>(state.range(0)));
  ed::QuantumState vector;
  vector.sites = model.sites;
  vector.amplitudes =
      Eigen::VectorXcd::Constant(std::int64_t{1} << model.sites,
                                 1.0 / std::sqrt(static_cast<double>(
                                           std::int64_t{1} << model.sites)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ed::apply_hamiltonian(model, vector));
  }
}
BENCHMARK(BM_HamiltonianAction)->Arg(12)->Arg(16)->Arg(18)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
