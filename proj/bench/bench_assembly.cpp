// Serial reference vs OpenMP column assembly of slice matrices.
// Arg 0 selects the slice weight, Arg 1 the parity.

#include <benchmark/benchmark.h>

#include <random>

#include "liext/kernels.hpp"
#include "support.hpp"

using namespace liext;

namespace {

struct Setup {
  SpacePtr space;
  Cochain d;

  Setup()
      : space(make_space(3, 4, std::vector<Part>{Part::M, Part::M, Part::W, Part::M, Part::M,
                                                 Part::W, Part::W})),
        d(space, Parity::Odd) {
    std::mt19937 rng(7);
    d = testing::random_cochain(space, {2}, Parity::Odd, rng, 0.3);
  }
};

const Setup& setup() {
  static const Setup s;
  return s;
}

const Weight kWeights[] = {{0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}};

Slice slice_for(const benchmark::State& state) {
  return Slice::weight(setup().space, kWeights[state.range(0)],
                       state.range(1) ? Parity::Odd : Parity::Even);
}

void BM_serial(benchmark::State& state) {
  const Slice sl = slice_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(apply_columns_serial(setup().d, sl));
  state.counters["columns"] = static_cast<double>(sl.dim());
}

void BM_parallel(benchmark::State& state) {
  const Slice sl = slice_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(apply_columns_parallel(setup().d, sl));
  state.counters["columns"] = static_cast<double>(sl.dim());
}

void weights(benchmark::internal::Benchmark* b) {
  for (int w = 0; w < 5; ++w)
    for (int p : {0, 1}) b->Args({w, p});
}

}  // namespace

BENCHMARK(BM_serial)->Apply(weights)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_parallel)->Apply(weights)->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
