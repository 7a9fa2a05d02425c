#include <benchmark/benchmark.h>

#include "copos/membership.hpp"
#include "copos/pathology.hpp"
#include "copos/solver.hpp"

using namespace copos;

namespace {

SymMatrix identity_plus_ones(int n) { return SymMatrix::identity(n) + SymMatrix::ones(n); }

void BM_BuildK(benchmark::State& state) {
  const auto m = identity_plus_ones(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cones::build_K_membership(m, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_BuildK)->Args({4, 1})->Args({6, 1})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_MembershipK(benchmark::State& state) {
  const auto problem = cones::build_K_membership(identity_plus_ones(static_cast<int>(state.range(0))),
                                                 static_cast<int>(state.range(1)));
  state.counters["gram_side"] = problem.layout.blocks[0].size;
  state.counters["rows"] = static_cast<double>(problem.sdp.num_constraints());
  for (auto _ : state) benchmark::DoNotOptimize(cones::decide_membership(problem));
}
BENCHMARK(BM_MembershipK)->Args({3, 0})->Args({5, 0})->Args({4, 1})->Args({5, 1})->Args({6, 1})
    ->Unit(benchmark::kMillisecond);

void BM_MembershipQ(benchmark::State& state) {
  const auto problem = cones::build_Q_membership(identity_plus_ones(static_cast<int>(state.range(0))),
                                                 static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(cones::decide_membership(problem));
}
BENCHMARK(BM_MembershipQ)->Args({5, 0})->Args({5, 1})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_InfeasibilityPaddedC5(benchmark::State& state) {
  const auto problem = cones::build_K_membership(pathology::c5_padded_matrix(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cones::decide_membership(problem));
}
BENCHMARK(BM_InfeasibilityPaddedC5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
