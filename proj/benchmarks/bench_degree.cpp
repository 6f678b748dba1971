#include <benchmark/benchmark.h>

#include "commdeg/degree.hpp"
#include "commdeg/group_spec.hpp"
#include "commdeg/sampler.hpp"

using namespace commdeg;

namespace {

const GroupTable& s5() {
  static const GroupTable g = symmetric_group(5);
  return g;
}

void BM_Bruteforce(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(degree_bruteforce(s5(), {kDefaultOrderCap, 1}));
}
BENCHMARK(BM_Bruteforce);

void BM_BruteforceWorkers(benchmark::State& state) {
  const unsigned w = unsigned(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(degree_bruteforce(s5(), {kDefaultOrderCap, w}));
}
BENCHMARK(BM_BruteforceWorkers)->Arg(2)->Arg(4);

void BM_CentralizerSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(degree_centralizer_sum(s5()));
}
BENCHMARK(BM_CentralizerSum);

void BM_Structural(benchmark::State& state) {
  const GroupTable g = heisenberg_group(5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(degree_structural(g));
}
BENCHMARK(BM_Structural);

void BM_SymmetricClosure(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_group(n));
}
BENCHMARK(BM_SymmetricClosure)->Arg(4)->Arg(5)->Arg(6);

void BM_DegreeMn(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(degree_mn(s5(), 2, 3));
}
BENCHMARK(BM_DegreeMn);

void BM_DegreeMnPushforward(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(degree_mn_pushforward(s5(), 2, 3));
}
BENCHMARK(BM_DegreeMnPushforward);

void BM_EstimateDihedral(benchmark::State& state) {
  const SamplerPreset p = dihedral_sampler();
  for (auto _ : state) benchmark::DoNotOptimize(estimate_degree_mn(p, 1, 1, 100000, 1));
}
BENCHMARK(BM_EstimateDihedral);

}  // namespace

BENCHMARK_MAIN();
