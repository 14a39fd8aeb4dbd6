#include <benchmark/benchmark.h>

#include "support.hpp"
#include "tiw/verify.hpp"

namespace {

using namespace tiw;

void BM_BuildI1(benchmark::State& state) {
  for (auto _ : state) {
    auto l = test::load("i1.json");
    benchmark::DoNotOptimize(l->it().build(l->it().all()).conditions.size());
  }
}
BENCHMARK(BM_BuildI1)->Unit(benchmark::kMillisecond);

void BM_SynthAllConditions(benchmark::State& state) {
  const auto& it = test::shared("i1.json").it();
  const auto& conds = it.build(it.all()).conditions;
  for (auto _ : state)
    for (const auto& p : conds) benchmark::DoNotOptimize(synth_E(it, it.all(), p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(conds.size()));
}
BENCHMARK(BM_SynthAllConditions)->Unit(benchmark::kMillisecond);

void BM_MainTheorem(benchmark::State& state) {
  const auto& l = test::shared("i1.json");
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(l.it(), l.wb.names).checked());
}
BENCHMARK(BM_MainTheorem)->Unit(benchmark::kMillisecond);

void BM_EdValidation(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  auto m = ed_model(k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(validate_borel_model(m).size());
}
BENCHMARK(BM_EdValidation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
