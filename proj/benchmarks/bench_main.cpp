#include <benchmark/benchmark.h>

#include "finprime/algebra.hpp"
#include "finprime/classifier.hpp"
#include "finprime/gadgets.hpp"
#include "finprime/oracle.hpp"
#include "finprime/primality.hpp"
#include "finprime/random.hpp"

using namespace finprime;

namespace {

const Alphabet kThree{"0", "1", "2"};

void BM_Minimize(benchmark::State& state) {
    Rng rng(1);
    Dfa a = random_dfa(rng, static_cast<std::size_t>(state.range(0)), kThree);
    for (auto _ : state) benchmark::DoNotOptimize(minimize(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Minimize)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_Equivalent(benchmark::State& state) {
    Rng rng(2);
    Dfa a = random_dfa(rng, static_cast<std::size_t>(state.range(0)), kThree);
    Dfa b = minimize(a);
    for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b));
}
BENCHMARK(BM_Equivalent)->RangeMultiplier(4)->Range(16, 4096);

void BM_DecideIntersection(benchmark::State& state) {
    Rng rng(3);
    Dfa a = random_linear(rng, static_cast<std::size_t>(state.range(0)), kThree, true);
    for (auto _ : state) benchmark::DoNotOptimize(decide_intersection_primality(a));
}
BENCHMARK(BM_DecideIntersection)->RangeMultiplier(2)->Range(4, 256);

void BM_IntersectionDecomposition(benchmark::State& state) {
    Rng rng(4);
    // a safety profile with the CEP, so the decomposition is built from chains and skips
    Dfa a;
    do {
        a = random_linear(rng, static_cast<std::size_t>(state.range(0)), kThree, true);
    } while (decide_intersection_primality(a).prime());
    for (auto _ : state) benchmark::DoNotOptimize(intersection_decomposition(a));
}
BENCHMARK(BM_IntersectionDecomposition)->DenseRange(4, 10, 2);

void BM_FactorPool(benchmark::State& state) {
    // a fresh alphabet name per iteration defeats the pool cache
    std::size_t round = 0;
    for (auto _ : state) {
        Alphabet al{"p" + std::to_string(round++), "q"};
        benchmark::DoNotOptimize(factor_pool(static_cast<std::size_t>(state.range(0)), al).size());
    }
}
BENCHMARK(BM_FactorPool)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_OracleIndexFive(benchmark::State& state) {
    Alphabet bits{"0", "1"};
    auto all = enumerate_minimal_adfas(5, bits);
    factor_pool(4, bits);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_primality(all[i]));
        i = (i + 1) % all.size();
    }
}
BENCHMARK(BM_OracleIndexFive)->Unit(benchmark::kMillisecond);

void BM_SprimeGadget(benchmark::State& state) {
    Rng rng(5);
    Digraph g = random_digraph(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decide_s_primality(sprime_gadget(g)));
}
BENCHMARK(BM_SprimeGadget)->RangeMultiplier(4)->Range(8, 512);

}  // namespace

BENCHMARK_MAIN();
