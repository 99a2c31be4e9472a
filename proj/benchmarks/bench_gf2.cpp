#include <benchmark/benchmark.h>

#include <random>

#include "dsa/gf2.hpp"
#include "dsa/rng.hpp"

namespace {

dsa::LinearSystem random_system(std::size_t k, std::size_t rows, double density,
                                std::mt19937_64& gen) {
    dsa::LinearSystem sys;
    sys.unknowns = k;
    for (std::size_t r = 0; r < rows; ++r) {
        dsa::Equation eq{dsa::BitVector(k), dsa::BitVector(64)};
        for (std::size_t i = 0; i < k; ++i)
            if (dsa::uniform_unit(gen) < density) eq.coeffs.flip(i);
        sys.rows.push_back(std::move(eq));
    }
    return sys;
}

void BM_EliminateSparse(benchmark::State& state) {
    std::mt19937_64 gen(1);
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto sys = random_system(k, 2 * k, 3.0 / static_cast<double>(k), gen);
    for (auto _ : state) benchmark::DoNotOptimize(dsa::eliminate(sys));
    state.SetComplexityN(state.range(0));
}

void BM_EliminateDense(benchmark::State& state) {
    std::mt19937_64 gen(2);
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto sys = random_system(k, 2 * k, 0.5, gen);
    for (auto _ : state) benchmark::DoNotOptimize(dsa::eliminate(sys));
    state.SetComplexityN(state.range(0));
}

void BM_XorAccumulate(benchmark::State& state) {
    std::mt19937_64 gen(3);
    dsa::Equation eq{dsa::BitVector(800), dsa::BitVector(64)};
    const dsa::BitVector payload = dsa::BitVector::random(64, gen);
    std::size_t sensor = 0;
    for (auto _ : state) {
        eq = dsa::xor_accumulate(std::move(eq), sensor, payload);
        sensor = (sensor + 37) % 800;
        benchmark::DoNotOptimize(eq);
    }
}

}  // namespace

BENCHMARK(BM_EliminateSparse)->Arg(100)->Arg(200)->Arg(400)->Arg(800)->Complexity();
BENCHMARK(BM_EliminateDense)->Arg(100)->Arg(200)->Arg(400)->Complexity();
BENCHMARK(BM_XorAccumulate);
