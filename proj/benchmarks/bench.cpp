#include <benchmark/benchmark.h>

#include "agm/curve_counting.hpp"
#include "agm/field.hpp"
#include "agm/node_dynamics.hpp"
#include "agm/ratio_dynamics.hpp"
#include "agm/swarm_graph.hpp"

static void BM_FieldMul(benchmark::State& state) {
  agm::FieldCtx f = agm::FieldCtx::make(static_cast<std::uint32_t>(state.range(0)));
  agm::Elem x = 2, y = 3;
  for (auto _ : state) {
    x = f.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(29)->Arg(1009)->Arg(65537);

static void BM_SqrtAll(benchmark::State& state) {
  agm::FieldCtx f = agm::FieldCtx::make(static_cast<std::uint32_t>(state.range(0)));
  agm::Elem x = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.sqrt_all(x));
    x = x + 1 == f.q() ? 1 : x + 1;
  }
}
BENCHMARK(BM_SqrtAll)->Arg(1009)->Arg(65537);

static void BM_KClassification(benchmark::State& state) {
  agm::FieldCtx f = agm::FieldCtx::make(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(agm::KClassification::compute(f));
}
BENCHMARK(BM_KClassification)->Arg(101)->Arg(1009)->Arg(10007);

static void BM_NodeClassification(benchmark::State& state) {
  agm::FieldCtx f = agm::FieldCtx::make(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(agm::NodeClassification::compute(f));
}
BENCHMARK(BM_NodeClassification)->Arg(101)->Arg(509);

static void BM_BuildAndDecompose(benchmark::State& state) {
  agm::FieldCtx f = agm::FieldCtx::make(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    agm::SwarmGraph g = agm::build_adv_graph(f);
    benchmark::DoNotOptimize(agm::decompose(g));
  }
}
BENCHMARK(BM_BuildAndDecompose)->Arg(29)->Arg(229)->Arg(1013);

static void BM_PointCount(benchmark::State& state) {
  agm::FieldCtx f = agm::FieldCtx::make(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(agm::brute_point_count(f));
}
BENCHMARK(BM_PointCount)->Arg(1009)->Arg(65537);

BENCHMARK_MAIN();
