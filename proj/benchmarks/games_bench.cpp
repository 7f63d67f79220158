#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "mzerase/cavity.hpp"
#include "mzerase/discrimination.hpp"
#include "mzerase/games.hpp"

using namespace mzerase;

namespace {

constexpr double kPi = std::numbers::pi;

void BM_PhaseGame(benchmark::State& state) {
    const PhaseGameConfig cfg{{0.75 * kPi, 1.5 * kPi, 0.5 * kPi}, 0.7, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(play_phase_game(cfg));
    }
}
BENCHMARK(BM_PhaseGame);

void BM_FindPhi0Tilde(benchmark::State& state) {
    const InteractionParams p{0.75 * kPi, 1.5 * kPi, 0.5 * kPi};
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_phi0_tilde(p));
    }
}
BENCHMARK(BM_FindPhi0Tilde);

void BM_OptimizeChi(benchmark::State& state) {
    const InteractionParams p{0.75 * kPi, 1.5 * kPi, 0.5 * kPi};
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_chi(p, 0.5 * kPi));
    }
}
BENCHMARK(BM_OptimizeChi);

void BM_AverageE(benchmark::State& state) {
    const InteractionParams p{0.75 * kPi, 1.5 * kPi, 0.5 * kPi};
    const auto panels = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(average_erasure_information(p, 0.3, panels));
    }
}
BENCHMARK(BM_AverageE)->Arg(256)->Arg(2048);

void BM_SymmetricBasis(benchmark::State& state) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss;
    const auto dim = static_cast<std::size_t>(state.range(0));
    auto rand_state = [&]() {
        std::vector<cplx> amps(dim);
        for (auto& a : amps) a = {gauss(rng), gauss(rng)};
        return PureState::normalized(std::move(amps));
    };
    const DiscriminationProblem prob{rand_state(), rand_state()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetric_basis(prob));
    }
}
BENCHMARK(BM_SymmetricBasis)->Arg(2)->Arg(5)->Arg(16);

void BM_BruteForceOracle(benchmark::State& state) {
    const DiscriminationProblem prob{PureState::basis_state(2, 0),
                                     lower_arm_ancilla(0.6 * kPi, 0.9)};
    const auto samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_optimal_basis(prob, samples));
    }
}
BENCHMARK(BM_BruteForceOracle)->Arg(1000)->Arg(10000);

void BM_MichelsonReport(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(michelson_report(0.6 * kPi));
    }
}
BENCHMARK(BM_MichelsonReport);

}  // namespace

BENCHMARK_MAIN();
