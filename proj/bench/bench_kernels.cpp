#include <benchmark/benchmark.h>

#include <random>

#include "qseries/kernels.hpp"
#include "qseries/partitions.hpp"

using namespace qseries;

namespace {

std::vector<Rational> random_coefs(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    v.emplace_back(num(gen), den(gen));
  }
  return v;
}

void BM_ConvolveSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_coefs(n, 1), b = random_coefs(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::convolve_serial<Rational>(a, b, n));
  }
}

void BM_ConvolveOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_coefs(n, 1), b = random_coefs(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::convolve_omp<Rational>(a, b, n));
  }
}

void BM_TallySerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::tally_serial(static_cast<int>(state.range(0))));
  }
}

void BM_TallyOmp(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::tally_omp(static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_ConvolveSerial)->Arg(64)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveOmp)->Arg(64)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallySerial)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallyOmp)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
