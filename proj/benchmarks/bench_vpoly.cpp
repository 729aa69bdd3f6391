#include <benchmark/benchmark.h>

#include <numeric>

#include "vpoly/evaluators.hpp"
#include "vpoly/ffcount.hpp"
#include "vpoly/groth.hpp"
#include "vpoly/vpolynomial.hpp"

using namespace vpoly;

namespace {

std::vector<Weight> mixed_weights(std::size_t n) {
  std::vector<Weight> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(Weight{i % 3});
  return w;
}

Assignment<PrimeField> fp_point() {
  const PrimeField f(1'000'003);
  Assignment<PrimeField> a(f);
  a.set_default_t(f.from_integer(3));
  a.set_default_x(f.from_integer(5));
  return a;
}

void BM_FkCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = make_cycle(n, mixed_weights(n));
  for (auto _ : state) benchmark::DoNotOptimize(fk_polynomial(g));
}
BENCHMARK(BM_FkCycle)->DenseRange(4, 12, 4);

void BM_DcCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = make_cycle(n, mixed_weights(n));
  for (auto _ : state) benchmark::DoNotOptimize(dc_polynomial(g));
}
BENCHMARK(BM_DcCycle)->DenseRange(4, 12, 4);

void BM_EvalLine(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = mixed_weights(n);
  const auto a = fp_point();
  for (auto _ : state) benchmark::DoNotOptimize(eval_line(w, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalLine)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);

void BM_EvalCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = mixed_weights(n);
  const auto a = fp_point();
  for (auto _ : state) benchmark::DoNotOptimize(eval_cycle(w, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalCycle)->RangeMultiplier(2)->Range(16, 128)->Complexity(benchmark::oNCubed);

void BM_EvalGenericCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = make_cycle(n, mixed_weights(n));
  const auto a = fp_point();
  for (auto _ : state) benchmark::DoNotOptimize(eval_generic(g, a));
}
BENCHMARK(BM_EvalGenericCycle)->DenseRange(8, 24, 8);

void BM_CountPerturbedTriangle(benchmark::State& state) {
  const auto poly = fk_polynomial(make_cycle(3, {Weight{1}, Weight{0}, Weight{0}}));
  const auto vars = variables_of(poly);
  CountOptions opts;
  opts.method = state.range(1) ? CountMethod::linear_elimination : CountMethod::brute;
  opts.workers = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(count_zeros(poly, vars, static_cast<std::uint64_t>(state.range(0)), opts));
}
BENCHMARK(BM_CountPerturbedTriangle)->ArgsProduct({{5, 11, 17}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_HalfPartitionGadget(benchmark::State& state) {
  std::vector<std::uint64_t> set;
  for (std::int64_t i = 0; i < state.range(0); ++i) set.push_back(static_cast<std::uint64_t>(i % 7 + 1));
  if (std::accumulate(set.begin(), set.end(), std::uint64_t{0}) % 2) ++set[0];
  for (auto _ : state) benchmark::DoNotOptimize(decide_half_partition(set));
}
BENCHMARK(BM_HalfPartitionGadget)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_BananaClosed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(banana_closed(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BananaClosed)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
