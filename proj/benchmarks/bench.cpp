#include <benchmark/benchmark.h>

#include "fracterm/axioms.hpp"
#include "fracterm/calculator.hpp"
#include "fracterm/syntax.hpp"

using namespace fracterm;

namespace {

const char* kExpr = "((1/2 + 2/3) * (3 - 4/5)) / ((7/9) / (1 + 1/11)) - 13/17";

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse(kExpr));
}
BENCHMARK(BM_Parse);

void BM_NormalizeSafe(benchmark::State& state) {
  const Term t = parse(kExpr);
  for (auto _ : state) benchmark::DoNotOptimize(normalize_safe(t));
}
BENCHMARK(BM_NormalizeSafe);

void BM_NormalizeFull(benchmark::State& state) {
  const Term t = parse(kExpr);
  for (auto _ : state) benchmark::DoNotOptimize(normalize_full(t));
}
BENCHMARK(BM_NormalizeFull);

// four variables over GF(7): 2401 assignments per identity
void BM_CheckCfarGf7(benchmark::State& state) {
  const Identity& cfar = find_identity("CFAR");
  const Meadow m = Meadow::gfp(7);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_identity(cfar.lhs, cfar.rhs, cfar.guards, m, threads));
}
// wall time: the work happens on worker threads
BENCHMARK(BM_CheckCfarGf7)->Arg(1)->Arg(4)->UseRealTime();

void BM_CatalogGf7(benchmark::State& state) {
  const Meadow m = Meadow::gfp(7);
  for (auto _ : state) benchmark::DoNotOptimize(check_identities(m));
}
BENCHMARK(BM_CatalogGf7);

}  // namespace

BENCHMARK_MAIN();
