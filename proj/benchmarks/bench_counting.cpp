#include <benchmark/benchmark.h>

#include "cwcount/generators.hpp"
#include "cwcount/matching_dp.hpp"
#include "cwcount/oracle.hpp"
#include "cwcount/path_dp.hpp"

using namespace cwcount;

namespace {

void BM_pairs_on_cographs(benchmark::State& state) {
    ExprPtr expr = gen_cograph(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        MCNodeResult r = run_mc(expr);
        benchmark::DoNotOptimize(r.table);
    }
}
BENCHMARK(BM_pairs_on_cographs)->DenseRange(8, 24, 4);

void BM_paths_on_paths(benchmark::State& state) {
    ExprPtr expr = gen_path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PMNodeResult r = run_pm(expr);
        benchmark::DoNotOptimize(r.table);
    }
}
BENCHMARK(BM_paths_on_paths)->DenseRange(4, 16, 4);

void BM_paths_on_cliques(benchmark::State& state) {
    ExprPtr expr = gen_clique(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PMNodeResult r = run_pm(expr);
        benchmark::DoNotOptimize(r.table);
    }
}
BENCHMARK(BM_paths_on_cliques)->DenseRange(4, 14, 2);

void BM_matchings_on_cliques(benchmark::State& state) {
    ExprPtr expr = gen_clique(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MatchedTable t = run_matchings(expr);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_matchings_on_cliques)->DenseRange(8, 32, 8);

void BM_enumeration_on_random(benchmark::State& state) {
    CorpusInstance inst = random_corpus_instance(7, static_cast<int>(state.range(0)), 3);
    LabeledGraph g = evaluate(inst.expr, inst.width);
    for (auto _ : state) {
        PMTable t = enumerate_pm(g);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_enumeration_on_random)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
