#include <benchmark/benchmark.h>

#include <vector>

#include "bhm/banded.hpp"
#include "bhm/laurent.hpp"
#include "bhm/sampling.hpp"
#include "bhm/two_sided.hpp"

using namespace bhm;

namespace {

EnsembleSpec ensemble(int p) {
  return {p, std::vector<Distribution>(p + 1, Distribution::uniform(Rational(-1), Rational(1))), 1};
}

BandedHessenberg<Complex> matrix(int n, int p) {
  return BandedHessenberg<Complex>::leading(sample_one_sided<Complex>(ensemble(p), n, {0, Role::lhs_matrix}), n);
}

void BM_TracePowersBanded(benchmark::State& state) {
  const auto b = matrix(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(trace_powers(b, 6));
}
BENCHMARK(BM_TracePowersBanded)->Arg(50)->Arg(200)->Arg(800);

void BM_TracePowersDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = matrix(n, 2).dense();
  for (auto _ : state) {
    auto pw = a;
    Complex tr = 0.0;
    for (int s = 2; s <= 6; ++s) {
      std::vector<std::vector<Complex>> next(n, std::vector<Complex>(n));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          for (int j = 0; j < n; ++j) next[i][j] += pw[i][k] * a[k][j];
      pw.swap(next);
      for (int i = 0; i < n; ++i) tr += pw[i][i];
    }
    benchmark::DoNotOptimize(tr);
  }
}
BENCHMARK(BM_TracePowersDense)->Arg(50)->Arg(200);

void BM_SeriesMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::vector<Complex> c(order + 1);
  for (int k = 0; k <= order; ++k) c[k] = Complex(1.0 / (k + 1), 0.5 / (k + 2));
  const Laurent<Complex> f(c);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, f));
}
BENCHMARK(BM_SeriesMultiply)->Arg(8)->Arg(32)->Arg(128);

void BM_SeriesMultiplyExact(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::vector<ExactComplex> c(order + 1);
  for (int k = 0; k <= order; ++k) c[k] = ExactComplex(Rational(1, k + 1));
  const Laurent<ExactComplex> f(c);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, f));
}
BENCHMARK(BM_SeriesMultiplyExact)->Arg(8)->Arg(32);

void BM_WSeries(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const auto wnd = sample_window<Complex>(ensemble(p), w_series_half_width(p, 0, order), {0, Role::window});
  for (auto _ : state) benchmark::DoNotOptimize(w_series(wnd, 0, order));
}
BENCHMARK(BM_WSeries)->Args({1, 8})->Args({2, 8})->Args({3, 12});

}  // namespace

BENCHMARK_MAIN();
