#include <benchmark/benchmark.h>

#include <map>

#include "maxsub/kernels.hpp"
#include "maxsub/lattice.hpp"
#include "maxsub/named.hpp"

using namespace maxsub;

namespace {

GroupPtr group_for(int which)
{
  switch (which) {
  case 0: return symmetric_group(6);
  case 1: return alternating_group(7);
  case 2: return psl2(16);
  default: return mathieu11();
  }
}

char const *name_for(int which)
{
  static char const *names[] = {"S6", "A7", "PSL(2,16)", "M11"};
  return names[which];
}

AnalysisPtr analysis_for(int which)
{
  static std::map<int, AnalysisPtr> cache;
  auto &a = cache[which];
  if (!a)
    a = GroupAnalysis::compute(group_for(which));
  return a;
}

std::vector<std::vector<ElementSet const *>> class_members(GroupAnalysis const &a)
{
  std::vector<std::vector<ElementSet const *>> out;
  for (auto const &c : a.lattice().classes) {
    std::vector<ElementSet const *> m;
    for (SubId s : c.members)
      m.push_back(&a.elements(s));
    out.push_back(std::move(m));
  }
  return out;
}

void perfect_residuals(benchmark::State &state, bool parallel)
{
  auto a = analysis_for(static_cast<int>(state.range(0)));
  auto const &u = a->universe();
  auto pairs = kernels::seed_pairs(u);
  for (auto _ : state) {
    auto r = parallel ? kernels::perfect_residuals_parallel(u, pairs) : kernels::perfect_residuals_serial(u, pairs);
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
  state.counters["pairs"] = static_cast<double>(pairs.size());
}

void containment(benchmark::State &state, bool parallel)
{
  auto a = analysis_for(static_cast<int>(state.range(0)));
  auto members = class_members(*a);
  for (auto _ : state) {
    auto m = parallel ? kernels::containment_parallel(members) : kernels::containment_serial(members);
    benchmark::DoNotOptimize(m);
  }
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
  state.counters["classes"] = static_cast<double>(members.size());
}

void lattice(benchmark::State &state, bool parallel)
{
  auto g = group_for(static_cast<int>(state.range(0)));
  LatticeOptions o;
  o.parallel = parallel;
  for (auto _ : state) {
    auto a = GroupAnalysis::compute(g, o);
    benchmark::DoNotOptimize(a);
  }
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK_CAPTURE(perfect_residuals, serial, false)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(perfect_residuals, parallel, true)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(containment, serial, false)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(containment, parallel, true)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lattice, serial, false)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(lattice, parallel, true)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
