#include <benchmark/benchmark.h>

#include "hpk/plancherel.hpp"
#include "hpk/residue.hpp"

using namespace hpk;

namespace {

void enumerate(benchmark::State& state, const char* tag, LatticeMode mode) {
  const auto d = build_datum(CartanType::parse(tag), mode);
  const auto q = equal_labels(d);
  const auto W = weyl_elements(d);
  for (auto _ : state) benchmark::DoNotOptimize(residual_cosets(d, q, W));
}

void residue_b2(benchmark::State& state) {
  const auto d = build_datum(CartanType::parse("B2"), LatticeMode::Root);
  const auto q = equal_labels(d);
  for (auto _ : state) benchmark::DoNotOptimize(shift_and_collect(d, q, 2.0, {}, 1));
}

void residue_a1(benchmark::State& state) {
  const auto d = build_datum(CartanType::parse("A1"), LatticeMode::Root);
  const auto q = equal_labels(d);
  for (auto _ : state) benchmark::DoNotOptimize(shift_and_collect(d, q, 2.0, {}, 1));
}

void poincare_sum(benchmark::State& state, const char* tag) {
  const auto d = build_datum(CartanType::parse(tag), LatticeMode::Root);
  const auto q = equal_labels(d);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poincare_truncated(d, q, 2.0, L));
}

}  // namespace

BENCHMARK_CAPTURE(enumerate, B2_Q, "B2", LatticeMode::Root)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate, B2_P, "B2", LatticeMode::Weight)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate, C3_P, "C3", LatticeMode::Weight)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate, F4, "F4", LatticeMode::Root)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK(residue_a1)->Unit(benchmark::kMillisecond);
BENCHMARK(residue_b2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(poincare_sum, A2, "A2")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(poincare_sum, G2, "G2")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
