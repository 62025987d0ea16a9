// Serial reference vs OpenMP kernels, plus the end-to-end factorization at a
// representative grid. Run: ./helixfact_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "helix/cepstral.hpp"
#include "helix/factorize.hpp"
#include "helix/kernels.hpp"
#include "helix/synth.hpp"

namespace {

using helix::kernels::cdouble;

std::vector<double> random_vec(std::size_t n, double lo = 0.5, double hi = 2.0) {
  std::mt19937_64 eng(42);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(eng);
  return v;
}

std::vector<cdouble> random_cvec(std::size_t n) {
  std::mt19937_64 eng(43);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cdouble> v(n);
  for (auto& z : v) z = cdouble(dist(eng), dist(eng));
  return v;
}

void bm_log_floor_serial(benchmark::State& state) {
  auto base = random_vec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto v = base;
    helix::kernels::serial::floor_below(v, 0.6);
    helix::kernels::serial::log_inplace(v);
    benchmark::DoNotOptimize(v.data());
  }
}

void bm_log_floor_parallel(benchmark::State& state) {
  auto base = random_vec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto v = base;
    helix::kernels::floor_below(v, 0.6);
    helix::kernels::log_inplace(v);
    benchmark::DoNotOptimize(v.data());
  }
}

void bm_complex_exp_serial(benchmark::State& state) {
  auto base = random_cvec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto v = base;
    helix::kernels::serial::complex_exp(v);
    benchmark::DoNotOptimize(v.data());
  }
}

void bm_complex_exp_parallel(benchmark::State& state) {
  auto base = random_cvec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto v = base;
    helix::kernels::complex_exp(v);
    benchmark::DoNotOptimize(v.data());
  }
}

void bm_sum_squares_serial(benchmark::State& state) {
  auto v = random_vec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(helix::kernels::serial::sum_squares(v));
}

void bm_sum_squares_blocked(benchmark::State& state) {
  auto v = random_vec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(helix::kernels::sum_squares(v));
}

void bm_nshp_window(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t dims[2] = {n, n};
  for (auto _ : state) {
    auto w = helix::region_window(helix::Region::upper_nshp(),
                                  std::span<const std::int64_t>(dims, 2));
    benchmark::DoNotOptimize(w.weights.data());
  }
}

void bm_factorize_nd(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  helix::kernels::set_parallel(parallel);
  const helix::Field d = helix::white_excitation(7, 256, 256);
  helix::FactorizeOptions opt;
  opt.diagnostics = false;
  for (auto _ : state) {
    auto r = helix::factorize_nd(d, helix::Region::upper_nshp(), opt);
    benchmark::DoNotOptimize(r.factor.data.data());
  }
  helix::kernels::set_parallel(true);
}

}  // namespace

BENCHMARK(bm_log_floor_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_log_floor_parallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_complex_exp_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_complex_exp_parallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_sum_squares_serial)->Arg(1 << 20);
BENCHMARK(bm_sum_squares_blocked)->Arg(1 << 20);
BENCHMARK(bm_nshp_window)->Arg(256)->Arg(512);
BENCHMARK(bm_factorize_nd)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
