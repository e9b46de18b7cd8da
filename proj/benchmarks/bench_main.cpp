// Microbenchmarks for the exact linear-algebra kernels and the heavier
// construction pipelines. Not part of ctest; run ./benchmarks/hcell_bench.

#include <benchmark/benchmark.h>

#include "fixtures_common.hpp"
#include "hcell/cohomology.hpp"
#include "hcell/tensor.hpp"

using namespace hcell;
using namespace hcell::testing;

namespace {

Matrix random_matrix(int n, const Field& f, std::uint64_t seed) {
  Matrix m(n, n, f);
  std::uint64_t s = seed;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      m.at(i, j) = Scalar::from_int(static_cast<long long>(s >> 33), f);
    }
  return m;
}

void BM_fp_matmul(benchmark::State& state) {
  Field f = Field::fp(257);
  int n = static_cast<int>(state.range(0));
  Matrix a = random_matrix(n, f, 1), b = random_matrix(n, f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_fp_matmul)->Arg(64)->Arg(128)->Arg(256);

void BM_fp_rank(benchmark::State& state) {
  Field f = Field::fp(257);
  int n = static_cast<int>(state.range(0));
  Matrix a = random_matrix(n, f, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a.rank());
}
BENCHMARK(BM_fp_rank)->Arg(128)->Arg(256);

void BM_tensor_over_A(benchmark::State& state) {
  auto alg = build_algebra(sweedler_pres());
  Bimodule aa = Bimodule::tensor_k(Bimodule::regular(alg), Bimodule::regular(alg));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_over_A(aa, aa).mod.dim);
}
BENCHMARK(BM_tensor_over_A);

void BM_hopf_build_taft(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(taft3_hopf(7).build.report.all_ok());
}
BENCHMARK(BM_hopf_build_taft);

void BM_gamma_regular_taft(benchmark::State& state) {
  auto fx = taft3_hopf(7);
  LeftModule a = LeftModule::regular(fx.alg);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_functor(fx.build.hd, a).q.dim);
}
BENCHMARK(BM_gamma_regular_taft);

void BM_bar_h3_z4(benchmark::State& state) {
  GroupData z4 = GroupData::cyclic(4);
  for (auto _ : state) benchmark::DoNotOptimize(bar_h3_integral(z4).divisors.size());
}
BENCHMARK(BM_bar_h3_z4);

}  // namespace

BENCHMARK_MAIN();
