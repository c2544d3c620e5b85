#include <benchmark/benchmark.h>

#include <cmath>

#include "stabilis/growth.hpp"
#include "stabilis/kernels.hpp"
#include "stabilis/multivariate.hpp"
#include "stabilis/poly_text.hpp"

using namespace stabilis;

namespace {

// Threads argument: 1 is the serial reference, 0 lets OpenMP pick.
SamplingConfig config(const benchmark::State& state) {
  SamplingConfig c;
  c.sample_count = 256;
  c.threads = static_cast<int>(state.range(0));
  return c;
}

void BM_CheckStability(benchmark::State& state) {
  MPoly f = parse_polynomial("(z1+2*z2+i)*(3*z1+z3+2*i)*(z2+z3+z1+i)*(z1*z2+z2*z3+z1*z3-1)", 3);
  SamplingConfig cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_stability(f, cfg).status);
}
BENCHMARK(BM_CheckStability)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_FirstFailure(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  auto work = [](std::size_t k) {
    double acc = 0;
    for (int j = 0; j < 2000; ++j) acc += std::sin(static_cast<double>(k * 31 + j));
    return acc > 1e9;
  };
  for (auto _ : state) benchmark::DoNotOptimize(first_failure(4096, work, threads));
}
BENCHMARK(BM_FirstFailure)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_GrowthGrid(benchmark::State& state) {
  MPoly f = parse_polynomial("(1+z1/2)*(1+z2/3)*(1+(z1+z2)/5)", 2);
  auto K = growth_constants_unchecked(f);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(growth_bound_check(f, K, 2.0, 128, threads).holds);
}
BENCHMARK(BM_GrowthGrid)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
