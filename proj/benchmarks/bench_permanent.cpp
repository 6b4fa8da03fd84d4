#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "multiport/permanent.hpp"

using namespace multiport;

namespace {

Matrix random_matrix(int side, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  Matrix a(side, side);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double re = static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
      const double im = static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

void BM_permanent(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Matrix a = random_matrix(side, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(permanent(a));
  }
  state.SetComplexityN(side);
}

void BM_permanent_chunked(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Matrix a = random_matrix(side, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detail::permanent_chunked(a, 64));
  }
}

void BM_repeat_submatrix(benchmark::State& state) {
  const Matrix s = random_matrix(6, 23);
  const Occupation out_occ = {2, 1, 0, 1, 0, 2};
  const Occupation in_occ = {1, 1, 1, 1, 1, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(repeat_submatrix(s, out_occ, in_occ));
  }
}

}  // namespace

BENCHMARK(BM_permanent)->DenseRange(4, 12, 4)->Arg(16)->Arg(20);
BENCHMARK(BM_permanent_chunked)->Arg(16)->Arg(20);
BENCHMARK(BM_repeat_submatrix);

BENCHMARK_MAIN();
