// Serial reference kernels against their OpenMP counterparts, plus one full
// solver step for scale.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mhdlab/compressible.hpp"
#include "mhdlab/initial_data.hpp"
#include "mhdlab/kernels.hpp"

namespace {

using namespace mhdlab;

std::vector<double> data(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

template <double (*Reduce)(std::span<const double>)>
void BM_reduce(benchmark::State& state) {
  const auto x = data(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Reduce(x));
  state.SetBytesProcessed(state.iterations() * state.range(0) * static_cast<int64_t>(sizeof(double)));
}

template <void (*Axpby)(double, std::span<const double>, double, std::span<const double>,
                        std::span<double>)>
void BM_axpby(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = data(n, 1), y = data(n, 2);
  std::vector<double> out(n);
  for (auto _ : state) {
    Axpby(0.5, x, -2.0, y, out);
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(state.iterations() * state.range(0) * static_cast<int64_t>(3 * sizeof(double)));
}

void BM_imex_step(benchmark::State& state) {
  const Grid g(2, static_cast<int>(state.range(0)), 6.283185307179586);
  const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
  const CompressibleState s{0.0, ScalarField(g, 1.0), orszag_tang_velocity(g), orszag_tang_field(g)};
  const double dt = 0.5 * stable_dt(s, p, {});
  for (auto _ : state) benchmark::DoNotOptimize(step(s, p, dt));
}

constexpr int64_t kLo = 1 << 12;
constexpr int64_t kHi = 1 << 20;

}  // namespace

BENCHMARK(BM_reduce<kernels::serial::sum_squares>)->Name("sum_squares/serial")->Range(kLo, kHi);
BENCHMARK(BM_reduce<kernels::parallel::sum_squares>)->Name("sum_squares/parallel")->Range(kLo, kHi);
BENCHMARK(BM_reduce<kernels::serial::max_abs>)->Name("max_abs/serial")->Range(kLo, kHi);
BENCHMARK(BM_reduce<kernels::parallel::max_abs>)->Name("max_abs/parallel")->Range(kLo, kHi);
BENCHMARK(BM_axpby<kernels::serial::axpby>)->Name("axpby/serial")->Range(kLo, kHi);
BENCHMARK(BM_axpby<kernels::parallel::axpby>)->Name("axpby/parallel")->Range(kLo, kHi);
BENCHMARK(BM_imex_step)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
