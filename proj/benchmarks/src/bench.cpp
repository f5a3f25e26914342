#include <benchmark/benchmark.h>

#include <random>

#include "fdl/ct_saturator.hpp"
#include "fdl/divergence.hpp"
#include "fdl/kernels.hpp"
#include "fdl/lp_saturator.hpp"
#include "fdl/trigpoly.hpp"

namespace {

fdl::TrigPoly random_poly(long long kmin, long long kmax) {
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);
  fdl::TrigPoly f = fdl::TrigPoly::zeros(kmin, kmax);
  for (fdl::cplx& z : f.c) z = fdl::cplx{gauss(rng), gauss(rng)};
  return f;
}

void BM_eval_grid(benchmark::State& state) {
  const fdl::TrigPoly f = random_poly(-2048, 2048);
  const std::size_t M = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fdl::eval_grid(f, M));
}
BENCHMARK(BM_eval_grid)->Arg(1 << 14)->Arg(1 << 16);

void BM_partial_sum_profile(benchmark::State& state) {
  const fdl::TrigPoly g = fdl::build_saturating_lp(2.0, int(state.range(0)));
  const long long N = g.degree();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fdl::partial_sum_profile(g, 0.31640625, N, 16));
}
BENCHMARK(BM_partial_sum_profile)->Arg(8)->Arg(10)->Arg(12);

void BM_profile_grid(benchmark::State& state) {
  const fdl::TrigPoly g = fdl::build_saturating_lp(2.0, 8);
  const std::size_t M = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fdl::profile_grid(g, M, g.degree(), 16, 2.0));
}
BENCHMARK(BM_profile_grid)->Arg(1 << 10)->Arg(1 << 12);

void BM_build_chi(benchmark::State& state) {
  const int j = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fdl::build_chi(3, j));
}
BENCHMARK(BM_build_chi)->Arg(8)->Arg(12)->Arg(16);

void BM_build_gj(benchmark::State& state) {
  const int j = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fdl::build_gj(j, 2.0));
}
BENCHMARK(BM_build_gj)->Arg(6)->Arg(9)->Arg(12);

void BM_jump_witness(benchmark::State& state) {
  const fdl::TrigPoly g = fdl::build_gj(9, 2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fdl::witness_jump(g, 0.25, 2, 9, 2.0, false));
}
BENCHMARK(BM_jump_witness);

void BM_log_block(benchmark::State& state) {
  const long long k = state.range(0);
  const std::size_t M = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(fdl::build_g(k, 0.5, M, 1e-10));
}
BENCHMARK(BM_log_block)->Args({16, 4096})->Args({64, 1 << 15});

void BM_kernel_l1(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(fdl::dirichlet_l1_norm(n));
}
BENCHMARK(BM_kernel_l1)->Arg(10)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
