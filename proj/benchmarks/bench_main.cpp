#include <benchmark/benchmark.h>

#include "chainperm/chain.hpp"
#include "chainperm/enumerate.hpp"
#include "chainperm/rational_gf.hpp"
#include "chainperm/sequences.hpp"

using namespace chainperm;

static void BM_AvoidersOf312(benchmark::State& state) {
  const Pattern p[] = {parse_pattern("312")};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_avoider(n, p, [&](const Permutation&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_AvoidersOf312)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_CountStrong312(benchmark::State& state) {
  const Chain c = parse_chain("(312 : 231)");
  CountOptions o;
  o.jobs = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_chain(static_cast<std::size_t>(state.range(0)), c, o));
}
BENCHMARK(BM_CountStrong312)->Args({10, 1})->Args({11, 1})->Args({11, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_CountLayeredPower(benchmark::State& state) {
  const Chain c = parse_chain("(231,321 : _ : _ : 132)");
  for (auto _ : state) benchmark::DoNotOptimize(count_chain(static_cast<std::size_t>(state.range(0)), c));
}
BENCHMARK(BM_CountLayeredPower)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_ClassicalMatch(benchmark::State& state) {
  const Permutation pi = parse_permutation("7 3 10 1 9 5 2 8 4 6");
  const Pattern tau = parse_pattern("2413");
  for (auto _ : state) benchmark::DoNotOptimize(contains(pi, tau));
}
BENCHMARK(BM_ClassicalMatch);

static void BM_Power(benchmark::State& state) {
  const Permutation pi = parse_permutation("7 3 10 1 9 5 2 8 4 6");
  for (auto _ : state) benchmark::DoNotOptimize(power(pi, 1000000007ULL));
}
BENCHMARK(BM_Power);

static void BM_GfCoefficients(benchmark::State& state) {
  const RationalGF gf = strong_312_gf();
  for (auto _ : state) benchmark::DoNotOptimize(gf_coefficients(gf, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GfCoefficients)->Arg(100)->Arg(1000);

static void BM_CompositionDp(benchmark::State& state) {
  const PartConstraint pc = layered_power_constraint(parse_permutation("132"), 6);
  for (auto _ : state) benchmark::DoNotOptimize(count_compositions(static_cast<std::size_t>(state.range(0)), pc));
}
BENCHMARK(BM_CompositionDp)->Arg(200);
BENCHMARK_MAIN();
