#include <benchmark/benchmark.h>

#include "chaindepth/chains.hpp"
#include "chaindepth/families.hpp"
#include "chaindepth/lattice.hpp"
#include "chaindepth/numtheory.hpp"

using namespace chaindepth;

static void BM_LatticePsl2(benchmark::State& state) {
  const FiniteGroup g = psl2(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    const auto lat = enumerate_subgroups(g);
    benchmark::DoNotOptimize(depth(lat).value);
  }
}
BENCHMARK(BM_LatticePsl2)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_LatticeA6(benchmark::State& state) {
  const FiniteGroup g = alternating(6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g).size());
}
BENCHMARK(BM_LatticeA6)->Unit(benchmark::kMillisecond);

static void BM_Factorize(benchmark::State& state) {
  const BigInt n = BigInt(1000003) * 1000033 * 4294967291UL;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n).complete());
}
BENCHMARK(BM_Factorize);

static void BM_Goldbach(benchmark::State& state) {
  std::uint64_t m = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ternary_goldbach(m).p3);
    m = m >= 999'999 ? 7 : m + 2;
  }
}
BENCHMARK(BM_Goldbach);

static void BM_AnChain(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(an_chain(n).total_length);
}
BENCHMARK(BM_AnChain)->Arg(100)->Arg(1000)->Arg(2000);
BENCHMARK_MAIN();
