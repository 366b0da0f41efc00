#include <benchmark/benchmark.h>

#include "csbm/graph.hpp"
#include "csbm/luczak.hpp"
#include "csbm/model.hpp"
#include "csbm/recovery.hpp"

namespace {

using namespace csbm;

CorrelatedPair make_pair(int n) {
  const ModelParams params(n, 20, 2, 0.9);
  return generate_subsampling(params, 7);
}

void BM_generate(benchmark::State& state) {
  const ModelParams params(static_cast<int>(state.range(0)), 20, 2, 0.9);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_subsampling(params, seed++));
  }
}
BENCHMARK(BM_generate)->Arg(500)->Arg(2000);

void BM_k_core(benchmark::State& state) {
  const CorrelatedPair pair = make_pair(static_cast<int>(state.range(0)));
  const Matching truth = Matching::from_permutation(pair.pi_star);
  const Graph inter = intersection_graph(pair.g1, pair.g2, truth);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k_core(inter, 13));
  }
}
BENCHMARK(BM_k_core)->Arg(500)->Arg(2000);

void BM_spectral_partition(benchmark::State& state) {
  const CorrelatedPair pair = make_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_partition(pair.g1));
  }
}
BENCHMARK(BM_spectral_partition)->Arg(500)->Arg(2000);

void BM_luczak_expand(benchmark::State& state) {
  const CorrelatedPair pair = make_pair(static_cast<int>(state.range(0)));
  VertexSet u;
  for (int v = 0; v < pair.g2.size(); v += 10) u.push_back(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(luczak_expand(pair.g2, u));
  }
}
BENCHMARK(BM_luczak_expand)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
