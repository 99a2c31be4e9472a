#include <benchmark/benchmark.h>

#include "dsa/collector.hpp"
#include "dsa/harness.hpp"

namespace {

void BM_Deploy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(dsa::deploy(n, 0.2, dsa::Region{100.0}, seed++));
}

void BM_Dissemination(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const dsa::Deployment d = dsa::deploy(n, 0.2, dsa::Region{100.0}, 7);
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            dsa::run_dissemination(d, dsa::RadioParams{10.0}, 160, 64, seed++));
}

void BM_FullTrial(benchmark::State& state) {
    // Reference-scale trial: deploy, disseminate, query 30%, decode.
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const dsa::Deployment d = dsa::deploy(n, 0.2, dsa::Region{100.0}, seed);
        const dsa::NetworkState net =
            dsa::run_dissemination(d, dsa::RadioParams{10.0}, 160, 64, seed + 1);
        const dsa::QueryPlan plan = dsa::select_query(net.storage_count(), 0.3, seed + 2);
        benchmark::DoNotOptimize(dsa::evaluate_trial(net, plan));
        ++seed;
    }
}

}  // namespace

BENCHMARK(BM_Deploy)->Arg(250)->Arg(1000);
BENCHMARK(BM_Dissemination)->Arg(250)->Arg(1000);
BENCHMARK(BM_FullTrial)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);
