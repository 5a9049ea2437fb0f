#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "corrpriv/info_measures.hpp"
#include "corrpriv/maxcorr.hpp"
#include "corrpriv/privacy.hpp"
#include "corrpriv/rng.hpp"
#include "corrpriv/stable.hpp"

using namespace corrpriv;

static JointDistribution make_random(int m, int n) {
  auto rng = make_engine(derive_seed(2024, "bench", m * 131 + n));
  return random_joint(m, n, rng);
}

static void BM_MaxCorrSpectral(benchmark::State& state) {
  int dim = static_cast<int>(state.range(0));
  auto d = make_random(dim, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_correlation_spectral(d).value);
  }
}
BENCHMARK(BM_MaxCorrSpectral)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_MaxCorrPower(benchmark::State& state) {
  int dim = static_cast<int>(state.range(0));
  auto d = make_random(dim, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_correlation_power(d).value);
  }
}
BENCHMARK(BM_MaxCorrPower)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_MutualInformation(benchmark::State& state) {
  auto d = make_random(16, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mutual_information(d));
  }
}
BENCHMARK(BM_MutualInformation);

static void BM_AceFromSamples(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto x = sample_stable(StableParams::standard_gaussian(), n, 1);
  auto noise = sample_stable(StableParams::standard_gaussian(), n, 2);
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + noise[i];
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_correlation_from_samples_ace(x, z, 32).value);
  }
}
BENCHMARK(BM_AceFromSamples)->Arg(100000)->Arg(1000000);

static void BM_SampleStable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_stable(StableParams::standard_cauchy(), 100000, 5));
  }
}
BENCHMARK(BM_SampleStable);

static void BM_RatePrivacy(benchmark::State& state) {
  auto d = dsbs(0.1);
  int restarts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rate_privacy(d, 0.2, restarts, 5).achieved_utility);
  }
}
BENCHMARK(BM_RatePrivacy)->Arg(8)->Arg(64);

BENCHMARK_MAIN();
