#include <benchmark/benchmark.h>

#include "incexc/atoms.hpp"
#include "incexc/moments.hpp"
#include "incexc/random_family.hpp"
#include "incexc/sieve.hpp"

using namespace incexc;

namespace {

void BM_ComputeAllSkn(benchmark::State& state) {
  const auto fam = random_family(64, static_cast<std::size_t>(state.range(0)), 1);
  SieveOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(compute_all_skn(fam, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeAllSkn)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ComputeSknSingleLevel(benchmark::State& state) {
  const auto fam = random_family(64, 16, 2);
  SieveOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(compute_skn(fam, static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_ComputeSknSingleLevel)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_AtomDecomposition(benchmark::State& state) {
  const auto fam = random_family(static_cast<std::size_t>(state.range(0)), 20, 3);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_finite_family(fam));
}
BENCHMARK(BM_AtomDecomposition)->Arg(256)->Arg(4096);

void BM_EvaluateSeriesGeometric(benchmark::State& state) {
  const auto s = sk_from_pmf(ZPlusPmf::geometric(Rat(BigInt(2), BigInt(5))), 2);
  const Rat eps = Rat(1) / pow(Rat(10), static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_series(s, 1, BracketTarget::Tail, eps));
}
BENCHMARK(BM_EvaluateSeriesGeometric)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
