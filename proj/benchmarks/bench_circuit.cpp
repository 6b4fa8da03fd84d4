#include <benchmark/benchmark.h>

#include <cstdint>

#include "multiport/circuit.hpp"

using namespace multiport;

namespace {

void BM_reck_decompose(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Matrix s = haar_random_unitary(m, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reck_decompose(s));
  }
}

void BM_decompose_roundtrip(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Matrix s = haar_random_unitary(m, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(reck_decompose(s)));
  }
}

void BM_haar_random_unitary(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_random_unitary(m, ++seed));
  }
}

}  // namespace

BENCHMARK(BM_reck_decompose)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_decompose_roundtrip)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_haar_random_unitary)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
