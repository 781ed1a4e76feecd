#include <benchmark/benchmark.h>

#include <random>

#include "simident/generators.hpp"
#include "simident/oracle.hpp"

using namespace simident;

namespace {

std::vector<NodeId> names(std::size_t n) {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

PDGraph fixed_cpdag(std::size_t n, double prob, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  return cpdag_of(random_dag(names(n), prob, rng));
}

}  // namespace

static void BM_MeekClose(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  PDGraph cpdag = fixed_cpdag(n, 0.35, 42);
  for (auto _ : state) benchmark::DoNotOptimize(meek_close(cpdag, {}));
}
BENCHMARK(BM_MeekClose)->Arg(8)->Arg(12)->Arg(16);

static void BM_EnumerateExtensions(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  SaMpdag g = validate_sa_mpdag(fixed_cpdag(n, 0.3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_extensions(g));
}
BENCHMARK(BM_EnumerateExtensions)->Arg(8)->Arg(12);

static void BM_MinimalComplexes(benchmark::State& state) {
  PDGraph g = fixed_cpdag(static_cast<std::size_t>(state.range(0)), 0.35, 13);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_complexes(g));
}
BENCHMARK(BM_MinimalComplexes)->Arg(8)->Arg(14);

static void BM_SimultaneousIdentify(benchmark::State& state) {
  std::mt19937_64 rng(99);
  CandidateSet gs = random_candidate_set(names(8), 3, rng, 0.35);
  NodeSet x{"v0"}, y{"v7"};
  IdentQuery q(x, y);
  for (auto _ : state) benchmark::DoNotOptimize(simultaneous_identify(gs, q));
}
BENCHMARK(BM_SimultaneousIdentify);

static void BM_EvaluateFormulaExact(benchmark::State& state) {
  auto p = example1_distribution();
  auto g2 = validate_sa_mpdag(figure1_g2());
  IdentQuery q({"3"}, {"2"});
  auto f = build_formula(g2, q);
  ValueMap xa{{"3", 0}};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_formula(f, p, xa));
}
BENCHMARK(BM_EvaluateFormulaExact)->Unit(benchmark::kMillisecond);

static void BM_BruteForceOracle(benchmark::State& state) {
  std::mt19937_64 rng(5);
  CandidateSet gs({validate_sa_mpdag(figure2_g1())});
  auto exts = enumerate_extensions(gs[0]);
  auto vars = uniform_cardinality_vars({"1", "2", "3", "4", "5"}, 3);
  auto p = random_positive_density(vars, exts.front(), rng);
  IdentQuery q({"4"}, {"5"});
  ValueMap xa{{"4", 1}};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_check(gs, p, q, xa));
}
BENCHMARK(BM_BruteForceOracle)->Unit(benchmark::kMillisecond);

static void BM_SparsestSearch(benchmark::State& state) {
  auto p = example1_distribution();
  for (auto _ : state)
    benchmark::DoNotOptimize(sparsest_cpdag_search(p, {"1", "2", "3", "4"}));
}
BENCHMARK(BM_SparsestSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
