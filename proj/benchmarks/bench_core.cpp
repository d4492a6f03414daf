#include <benchmark/benchmark.h>

#include <cstdint>

#include "equicake/instance_io.hpp"
#include "equicake/oracle.hpp"
#include "equicake/simplex.hpp"
#include "equicake/sperner.hpp"
#include "equicake/two_agent.hpp"
#include "equicake/valuation.hpp"

namespace {

using namespace equicake;

Instance corpus(const char* name) {
  return load_instance(std::string(EQUICAKE_CORPUS_DIR) + "/" + name);
}

void BM_evaluate_exact(benchmark::State& state) {
  Instance inst = corpus("example3.json");
  CutSet x = CutSet({Rational(48, 230), Rational(45, 230), Rational(137, 230)});
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_exact(inst, x));
}
BENCHMARK(BM_evaluate_exact);

void BM_label_grid(benchmark::State& state) {
  Instance inst = corpus("example1.json");
  std::int64_t m = state.range(0);
  for (auto _ : state) {
    int acc = 0;
    for_each_grid_vertex(3, m, [&](const GridPoint& p) {
      acc += label_vertex(inst, p.to_cutset());
    });
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * grid_vertex_count(3, m));
}
BENCHMARK(BM_label_grid)->Arg(16)->Arg(32);

void BM_enumerate_cells(benchmark::State& state) {
  std::int64_t m = state.range(0);
  for (auto _ : state) {
    std::int64_t count = 0;
    for_each_elementary_simplex(3, m, [&](const ElementarySimplex&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * elementary_simplex_count(3, m));
}
BENCHMARK(BM_enumerate_cells)->Arg(32)->Arg(64);

void BM_solve(benchmark::State& state) {
  Instance inst = corpus("example2_permuted.json");
  SolveOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, opt));
}
BENCHMARK(BM_solve);

void BM_min_gap_grid(benchmark::State& state) {
  Instance inst = corpus("example1.json");
  std::int64_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(min_gap_grid(inst, m));
  state.SetItemsProcessed(state.iterations() * grid_vertex_count(3, m));
}
BENCHMARK(BM_min_gap_grid)->Arg(30)->Arg(60);

void BM_solve_two(benchmark::State& state) {
  Instance inst = Instance::additive(
      {PiecewiseConstantDensity({Rational(0), Rational(1, 2), Rational(1)},
                                {Rational(-1), Rational(3)}),
       PiecewiseConstantDensity({Rational(0), Rational(1)}, {Rational(1)})});
  TwoAgentOptions opt;
  opt.eps = 1e-12;
  for (auto _ : state) benchmark::DoNotOptimize(solve_two(inst, opt));
}
BENCHMARK(BM_solve_two);

}  // namespace

BENCHMARK_MAIN();
