#include "combi/bijections.hpp"
#include "combi/families.hpp"
#include "combi/grammar.hpp"
#include "combi/objects/object.hpp"
#include "combi/verify.hpp"

#include <benchmark/benchmark.h>

using namespace combi;

static void BM_PolyMultiply(benchmark::State& state) {
    const auto p = families::p_poly(static_cast<int>(state.range(0)), families::PRoute::recurrence);
    for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMultiply)->DenseRange(4, 10, 2);

static void BM_PRecurrence(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(families::p_poly(static_cast<int>(state.range(0)), families::PRoute::recurrence));
}
BENCHMARK(BM_PRecurrence)->DenseRange(4, 12, 4);

static void BM_SeriesQ(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(families::series_family("Q", static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SeriesQ)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_GenerateCycleStirling(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        objects::generate(objects::ObjectClass::stirling2, n, std::nullopt,
                          [&](const objects::CombObject&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_GenerateCycleStirling)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_PhiMap(benchmark::State& state) {
    const auto w = objects::parse_decorated("3h 1h 4 2 6hc 5h");
    for (auto _ : state) benchmark::DoNotOptimize(bijections::phi_map(w));
}
BENCHMARK(BM_PhiMap);

static void BM_VerifyBijection(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bijections::verify_bijection(bijections::MapId::psi, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyBijection)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_GrammarDerive(benchmark::State& state) {
    const auto a = algebra::var(algebra::Var::a);
    for (auto _ : state) benchmark::DoNotOptimize(grammar::lemma1_grammar().derive(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GrammarDerive)->DenseRange(2, 8, 2);

static void BM_VerifyAllCapped(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify::run_all({{"*", static_cast<int>(state.range(0))}}));
}
BENCHMARK(BM_VerifyAllCapped)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
