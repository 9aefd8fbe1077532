#include <benchmark/benchmark.h>

#include "vcldim/dimensions.hpp"
#include "vcldim/random.hpp"

using namespace vcldim;

namespace {

ConceptClass random_class(std::size_t n, std::size_t m, std::uint64_t seed) {
  RandomSource rng(seed);
  ConceptClass c(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) c.set_label(i, j, rng.next_bit());
  }
  return c;
}

}  // namespace

static void BM_VcDimension(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ConceptClass c = random_class(n, 4 * n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(vc_dimension(c).value);
}
BENCHMARK(BM_VcDimension)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_Ldim(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ConceptClass c = random_class(n, 2 * n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ldim(c).value);
}
BENCHMARK(BM_Ldim)->Arg(6)->Arg(10)->Arg(14)->Arg(18);

static void BM_LdimOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ConceptClass c = random_class(n, 2 * n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ldim_oracle(c));
}
BENCHMARK(BM_LdimOracle)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
