// Serial reference vs OpenMP for the two oracle kernels.

#include <benchmark/benchmark.h>

#include "kampen/oracle.hpp"

using namespace kampen;

namespace {

DeformationPair pair_for(int n, int m) {
  for (std::uint64_t s = 1;; ++s) {
    auto p = random_pair(n, m, s);
    try {
      lambda_families(p);
      return p;
    } catch (const DegenerateConfiguration&) {
    }
  }
}

void BM_lambda(benchmark::State& state, Execution exec) {
  const auto p = pair_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_cochain(p, exec));
}

void BM_phi(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  const auto f = random_map(n, m, 3);
  const auto top = cells_full(n, m, m);
  for (auto _ : state) benchmark::DoNotOptimize(phi_cochain(f, top, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_lambda, serial, Execution::Serial)->Args({7, 2})->Args({8, 3});
BENCHMARK_CAPTURE(BM_lambda, parallel, Execution::Parallel)->Args({7, 2})->Args({8, 3});
BENCHMARK_CAPTURE(BM_phi, serial, Execution::Serial)->Args({7, 2})->Args({8, 3});
BENCHMARK_CAPTURE(BM_phi, parallel, Execution::Parallel)->Args({7, 2})->Args({8, 3});

BENCHMARK_MAIN();
