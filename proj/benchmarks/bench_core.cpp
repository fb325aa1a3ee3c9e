#include <benchmark/benchmark.h>

#include "dl2/restlab.hpp"
#include "dl2/runner.hpp"

namespace {

using namespace dl2;

const Workspace& bench_ws(int q) {
    static std::map<int, std::unique_ptr<Workspace>> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_unique<Workspace>(q)).first;
    return *it->second;
}

void BM_BuildGroupWithClasses(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const auto [p, e] = parse_q(q);
    const FieldTower tower(p, e);
    for (auto _ : state) {
        GroupModel g = build_group(tower, GroupKind::gl2);
        benchmark::DoNotOptimize(g.classes().size());
    }
}
BENCHMARK(BM_BuildGroupWithClasses)->Arg(3)->Arg(5)->Arg(7)->Arg(9)->Arg(11);

void BM_EvaluatorConstruction(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const Workspace& w = bench_ws(q);
    const GreenTable table = GreenTable::build(w.gl2_model);
    for (auto _ : state) {
        DlEvaluator ev(w.gl2_model, w.lab.torus(TorusKind::nonsplit), table);
        benchmark::DoNotOptimize(&ev);
    }
}
BENCHMARK(BM_EvaluatorConstruction)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

void BM_CharacterSweep(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const Workspace& w = bench_ws(q);
    const DlEvaluator& ev = w.lab.evaluator(TorusKind::nonsplit);
    const long n = static_cast<long>(q) * q - 1;
    for (auto _ : state) {
        for (long j = 0; j < n; ++j) {
            const ClassFunction chi =
                ev.character(w.lab.character(TorusKind::nonsplit, j));
            benchmark::DoNotOptimize(chi.degree());
        }
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_CharacterSweep)->Arg(5)->Arg(7)->Arg(9);

void BM_InnerProduct(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const Workspace& w = bench_ws(q);
    const ClassFunction a =
        w.lab.evaluator(TorusKind::nonsplit).character(w.lab.character(TorusKind::nonsplit, 1));
    const ClassFunction b =
        w.lab.evaluator(TorusKind::split).character(w.lab.character(TorusKind::split, 1, 0));
    for (auto _ : state) benchmark::DoNotOptimize(inner_product(a, b));
}
BENCHMARK(BM_InnerProduct)->Arg(5)->Arg(9);

void BM_RestrictionCheck(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const Workspace& w = bench_ws(q);
    for (auto _ : state)
        benchmark::DoNotOptimize(w.lab.restriction_deviation(
            TorusKind::nonsplit, w.lab.character(TorusKind::nonsplit, 1)));
}
BENCHMARK(BM_RestrictionCheck)->Arg(3)->Arg(5)->Arg(7);

void BM_Census(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const Workspace& w = bench_ws(q);
    for (auto _ : state) {
        const CensusSummary cs = w.lab.census();
        benchmark::DoNotOptimize(cs.orbit_count);
    }
}
BENCHMARK(BM_Census)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
