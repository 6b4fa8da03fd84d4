#include <benchmark/benchmark.h>

#include <cstdint>

#include "multiport/circuit.hpp"
#include "multiport/lift.hpp"

using namespace multiport;

namespace {

// One state-space build per (modes, photons) pair; validation is skipped so
// the permanent evaluation dominates.
void BM_lift(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Matrix s = haar_random_unitary(m, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift(s, n, false));
  }
  state.counters["dim"] = static_cast<double>(dimension(m, n));
}

void BM_transition_amplitude(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Matrix s = haar_random_unitary(m, 6);
  const Occupation in_occ(static_cast<std::size_t>(m), 1);
  Occupation out_occ(static_cast<std::size_t>(m), 0);
  out_occ[0] = m;  // all photons bunched into the first mode
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_amplitude(s, in_occ, out_occ, false));
  }
}

void BM_evolve_via_operators(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Matrix s = haar_random_unitary(m, 7);
  Occupation in_occ(static_cast<std::size_t>(m), 0);
  for (int k = 0; k < n; ++k) in_occ[static_cast<std::size_t>(k % m)] += 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_via_operators(s, in_occ, false));
  }
}

}  // namespace

BENCHMARK(BM_lift)->Args({2, 2})->Args({3, 3})->Args({4, 4})->Args({5, 5})->Args({6, 4});
BENCHMARK(BM_transition_amplitude)->DenseRange(4, 12, 4);
BENCHMARK(BM_evolve_via_operators)->Args({3, 3})->Args({4, 4})->Args({5, 5});

BENCHMARK_MAIN();
