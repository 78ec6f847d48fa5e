#include <benchmark/benchmark.h>

#include <random>

#include "tachyon/aberration.hpp"
#include "tachyon/kinematics.hpp"
#include "tachyon/montecarlo.hpp"
#include "tachyon/sidereal.hpp"
#include "tachyon/timeline.hpp"
#include "tachyon/window.hpp"

using namespace tachyon;

namespace {

constexpr double kDeg = 3.141592653589793 / 180.0;

void BM_ComposePlus(benchmark::State& state) {
    const TachyonBeta bt(8.0);
    const SubluminalBeta b(-0.4);
    for (auto _ : state) benchmark::DoNotOptimize(compose_plus(bt, b));
}
BENCHMARK(BM_ComposePlus);

void BM_ArrivalTime(benchmark::State& state) {
    const TachyonBeta bt(8.0);
    const SubluminalBeta b(-0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(tachyon_arrival_time(1.2, -1.0, 1.0, bt, b));
}
BENCHMARK(BM_ArrivalTime);

void BM_WindowRoundtrip(benchmark::State& state) {
    const TachyonBeta bt(8.0);
    const SubluminalBeta b(-0.4);
    for (auto _ : state) {
        const auto w = compute_window(ParticleBeta(1.0), bt, b);
        benchmark::DoNotOptimize(invert_beta_t(w));
        benchmark::DoNotOptimize(invert_beta(w));
    }
}
BENCHMARK(BM_WindowRoundtrip);

void BM_RunTimeline(benchmark::State& state) {
    const Geometry1D geometry(0.42, ParticleBeta(1.0));
    const TachyonBeta bt(8.0);
    const SubluminalBeta b(-0.4);
    for (auto _ : state) benchmark::DoNotOptimize(run_timeline(geometry, bt, b));
}
BENCHMARK(BM_RunTimeline);

void BM_InvertAngleExact(benchmark::State& state) {
    const TachyonBeta bt(100.0);
    const SubluminalBeta b(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(invert_angle_exact(0.9, bt, b));
}
BENCHMARK(BM_InvertAngleExact);

void BM_OccupancyScan(benchmark::State& state) {
    const SiderealConfig cfg(37.5 * kDeg, 0.01, SubluminalBeta(0.91),
                             TachyonBeta(432.72));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(occupancy_fraction(cfg, -0.7219, n));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_OccupancyScan)->Arg(100000);

void BM_SimulatePairs(benchmark::State& state) {
    const ExperimentConfig config{
        static_cast<std::uint64_t>(state.range(0)),
        WindowParams{ParticleBeta(1.0), TachyonBeta(8.0), SubluminalBeta(-0.4)},
        OccupancySchedule{1.0 / 3.0}, 42};
    for (auto _ : state) benchmark::DoNotOptimize(simulate(config));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulatePairs)->Arg(100000);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
