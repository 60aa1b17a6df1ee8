#include "tdorbit/classes.hpp"
#include "tdorbit/model.hpp"
#include "tdorbit/orbits.hpp"
#include "tdorbit/reps.hpp"

#include <benchmark/benchmark.h>

using namespace tdorbit;

static void BM_EnumerateOrbits(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto q = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_descriptors(n, q));
}
BENCHMARK(BM_EnumerateOrbits)->Args({6, 2})->Args({8, 2})->Args({5, 3});

static void BM_ClassCountRecursion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_classes_recursive(n, 5));
}
BENCHMARK(BM_ClassCountRecursion)->Arg(10)->Arg(20)->Arg(40);

static void BM_ClassTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto q = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) {
        ClassTable t(n, q);
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK(BM_ClassTable)->Args({3, 3})->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State& state) {
    const ClassTable table(static_cast<int>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(character_table(table));
}
BENCHMARK(BM_CharacterTable)->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

static void BM_VerifyModel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto q = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(verify_model(n, q));
}
BENCHMARK(BM_VerifyModel)->Args({3, 2})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
