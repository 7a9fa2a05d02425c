#include <benchmark/benchmark.h>

#include "copos/chromatic.hpp"
#include "copos/sqp.hpp"
#include "copos/stability.hpp"

using namespace copos;
using cones::ConeKind;

namespace {

void BM_ThetaCycle(benchmark::State& state) {
  const auto g = apps::Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apps::theta_r(g, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_ThetaCycle)->Args({5, 0})->Args({7, 0})->Args({5, 1})->Args({7, 1})->Unit(benchmark::kMillisecond);

void BM_SqpIdentity(benchmark::State& state) {
  const auto m = SymMatrix::identity(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apps::sqp_bound(m, 0, ConeKind::K));
}
BENCHMARK(BM_SqpIdentity)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ReciprocalIdentity(benchmark::State& state) {
  const auto m = SymMatrix::identity(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apps::sqp_reciprocal_bound(m, 0, ConeKind::K));
}
BENCHMARK(BM_ReciprocalIdentity)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ChromaticCycle(benchmark::State& state) {
  const auto g = apps::Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apps::chromatic_bound(g, 0));
}
BENCHMARK(BM_ChromaticCycle)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
