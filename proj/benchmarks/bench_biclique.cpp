#include <benchmark/benchmark.h>

#include "vcldim/biclique.hpp"
#include "vcldim/reductions.hpp"

using namespace vcldim;

static void BM_ContainsBiclique(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RandomSource rng(3);
  const BipartiteGraph g = folklore_clique_to_biclique(sample_planted(n, {1, 2}, n / 4, rng).graph);
  for (auto _ : state) benchmark::DoNotOptimize(contains_biclique(g, n / 4, n / 4).has_value());
}
BENCHMARK(BM_ContainsBiclique)->Arg(16)->Arg(32)->Arg(64);

static void BM_MaxBalanced(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RandomSource rng(4);
  const BipartiteGraph g = folklore_clique_to_biclique(sample_gnp(n, {1, 2}, rng));
  for (auto _ : state) benchmark::DoNotOptimize(max_balanced_biclique(g, n));
}
BENCHMARK(BM_MaxBalanced)->Arg(16)->Arg(24)->Arg(32);

static void BM_ExponentialBiclique(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const BipartiteGraph g = one_sided_product(BipartiteGraph::complete(t + 2, 6), t).graph;
  for (auto _ : state) benchmark::DoNotOptimize(contains_exponential_biclique(g, t).has_value());
}
BENCHMARK(BM_ExponentialBiclique)->Arg(2)->Arg(3)->Arg(4);

static void BM_FlipReduction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BipartiteGraph g = BipartiteGraph::complete(n, n);
  RandomSource rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(flip_reduction(g, rng).n_concepts());
}
BENCHMARK(BM_FlipReduction)->Arg(64)->Arg(256);
