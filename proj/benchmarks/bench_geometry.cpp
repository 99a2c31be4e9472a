#include <benchmark/benchmark.h>

#include <random>

#include "dsa/geometry.hpp"
#include "dsa/rng.hpp"

namespace {

void BM_ClippedCoverageArea(benchmark::State& state) {
    std::mt19937_64 gen(1);
    std::vector<dsa::Position> centers;
    for (int i = 0; i < 1024; ++i)
        centers.push_back({dsa::uniform_unit(gen) * 100, dsa::uniform_unit(gen) * 100});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dsa::clipped_coverage_area(centers[i & 1023], dsa::RadioParams{25.0}, dsa::Region{100.0}));
        ++i;
    }
}

void BM_InRange(benchmark::State& state) {
    std::mt19937_64 gen(2);
    std::vector<dsa::Position> points;
    for (int i = 0; i < 2048; ++i)
        points.push_back({dsa::uniform_unit(gen) * 100, dsa::uniform_unit(gen) * 100});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dsa::in_range(points[i & 2047], points[(i + 1) & 2047], dsa::RadioParams{10.0}));
        ++i;
    }
}

}  // namespace

BENCHMARK(BM_ClippedCoverageArea);
BENCHMARK(BM_InRange);

BENCHMARK_MAIN();
