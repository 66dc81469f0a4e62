#include "hdcov/numerics.hpp"
#include "hdcov/sim.hpp"
#include "hdcov/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace hdcov;

namespace {

SimulationConfig config(long long p, long long n, long long reps) {
    SimulationConfig c;
    c.p = p;
    c.n1 = n;
    c.replications = reps;
    c.seed = 42;
    return c;
}

void BM_SimulationSerial(benchmark::State& state) {
    const auto c = config(state.range(0), 500, 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_simulation_serial(c));
    }
    state.SetItemsProcessed(state.iterations() * c.replications);
}

void BM_SimulationParallel(benchmark::State& state) {
    auto c = config(state.range(0), 500, 64);
    c.workers = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_simulation(c));
    }
    state.SetItemsProcessed(state.iterations() * c.replications);
}

ObservationMatrix data(long long n, long long p) {
    const auto v = sample_standard_normal(RandomStream(1, 0), static_cast<std::size_t>(n * p));
    return ObservationMatrix(Eigen::Map<const Eigen::MatrixXd>(v.data(), n, p));
}

void BM_CovarianceBlocked(benchmark::State& state) {
    const auto x = data(500, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_covariance(x));
    }
}

void BM_CovarianceReference(benchmark::State& state) {
    const auto x = data(500, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_covariance_reference(x));
    }
}

}  // namespace

BENCHMARK(BM_SimulationSerial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulationParallel)->ArgsProduct({{50, 100}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CovarianceBlocked)->Arg(50)->Arg(100)->Arg(300)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CovarianceReference)->Arg(50)->Arg(100)->Arg(300)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
