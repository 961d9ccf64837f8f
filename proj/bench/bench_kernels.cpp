// Serial references against the OpenMP and Kronecker kernels, plus generic
// monic division against the [n]_q fast path.
#include <benchmark/benchmark.h>

#include <random>

#include "qcong/kernels.hpp"
#include "qcong/poly.hpp"
#include "qcong/qkit.hpp"

namespace k = qcong::kernels;

namespace {

k::Coeffs random_coeffs(std::size_t n, unsigned bits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  gmp_randclass gmp(gmp_randinit_default);
  gmp.seed(static_cast<unsigned long>(rng()));
  k::Coeffs out(n);
  for (auto& c : out) {
    c = gmp.get_z_bits(bits);
    if (rng() & 1) c = -c;
  }
  return out;
}

void BM_mul_serial(benchmark::State& state) {
  const auto a = random_coeffs(state.range(0), state.range(1), 1);
  const auto b = random_coeffs(state.range(0), state.range(1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::mul_schoolbook(a, b));
}

void BM_mul_parallel(benchmark::State& state) {
  const auto a = random_coeffs(state.range(0), state.range(1), 1);
  const auto b = random_coeffs(state.range(0), state.range(1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(k::parallel::mul_schoolbook(a, b));
}

void BM_mul_kronecker(benchmark::State& state) {
  const auto a = random_coeffs(state.range(0), state.range(1), 1);
  const auto b = random_coeffs(state.range(0), state.range(1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(k::mul_kronecker(a, b));
}

// Dividend is a product by [n]_q so both division routes see the same work.
qcong::IntPoly dividend(std::size_t len, std::size_t n) {
  qcong::IntPoly a(random_coeffs(len, 64, 3));
  return a * qcong::q_int(n) + qcong::IntPoly(random_coeffs(n - 1, 64, 4));
}

void BM_divrem_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  const qcong::IntPoly a = dividend(state.range(0), n);
  const qcong::IntPoly b = qcong::q_int(n);
  for (auto _ : state) {
    k::Coeffs rem(a.coeffs().begin(), a.coeffs().end());
    k::Coeffs quot;
    k::serial::divrem_monic(rem, b.coeffs(), quot);
    benchmark::DoNotOptimize(quot);
  }
}

void BM_divrem_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  const qcong::IntPoly a = dividend(state.range(0), n);
  const qcong::IntPoly b = qcong::q_int(n);
  for (auto _ : state) {
    k::Coeffs rem(a.coeffs().begin(), a.coeffs().end());
    k::Coeffs quot;
    k::parallel::divrem_monic(rem, b.coeffs(), quot);
    benchmark::DoNotOptimize(quot);
  }
}

void BM_divrem_qint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  const qcong::IntPoly a = dividend(state.range(0), n);
  for (auto _ : state) benchmark::DoNotOptimize(qcong::divrem_qint(a, n));
}

void mul_sizes(benchmark::internal::Benchmark* b) {
  for (long n : {16, 64, 256, 1024}) {
    for (long bits : {64, 1024}) b->Args({n, bits});
  }
}

void div_sizes(benchmark::internal::Benchmark* b) {
  for (long len : {1000, 10000}) {
    for (long n : {31, 199, 1021}) b->Args({len, n});
  }
}

}  // namespace

BENCHMARK(BM_mul_serial)->Apply(mul_sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_mul_parallel)->Apply(mul_sizes)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_mul_kronecker)->Apply(mul_sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_divrem_serial)->Apply(div_sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_divrem_parallel)->Apply(div_sizes)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_divrem_qint)->Apply(div_sizes)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
