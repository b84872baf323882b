// Serial reference kernels vs their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=Subset
//   ./bench_kernels --benchmark_filter=Scan

#include "symmsum/conjectures.hpp"
#include "symmsum/identities.hpp"
#include "symmsum/random.hpp"

#include <benchmark/benchmark.h>

#include <thread>

using namespace symmsum;

namespace {

struct Instance {
    Matrix<Rational> base;
    MatrixTuple<Rational> tuple;
};

Instance make_instance(std::size_t n, std::size_t big_n) {
    Rng rng = trial_rng(2024, big_n);
    std::vector<Matrix<Rational>> members;
    for (std::size_t i = 0; i < big_n; ++i) members.push_back(random_integer_matrix(n, rng));
    return Instance{random_integer_matrix(n, rng), MatrixTuple<Rational>(std::move(members))};
}

int hw_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

void BM_SubsetSumSerial(benchmark::State& state) {
    const auto inst = make_instance(4, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = alternating_subset_sum_serial(inst.base, inst.tuple,
                                               [](const Matrix<Rational>& m) { return det_exact(m); });
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SubsetSumSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_SubsetSumParallel(benchmark::State& state) {
    const auto inst = make_instance(4, static_cast<std::size_t>(state.range(0)));
    const int threads = hw_threads();
    for (auto _ : state) {
        auto r = alternating_subset_sum(
            inst.base, inst.tuple, [](const Matrix<Rational>& m) { return det_exact(m); }, threads);
        benchmark::DoNotOptimize(r);
    }
    state.counters["threads"] = threads;
}
BENCHMARK(BM_SubsetSumParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

ScanConfig scan_config() {
    ScanConfig cfg;
    cfg.r = 4;
    cfg.m = 6;
    cfg.ks = {1, 2, 3, 4};
    cfg.trials = 200;
    cfg.seed = 42;
    return cfg;
}

void BM_ScanSerial(benchmark::State& state) {
    const auto cfg = scan_config();
    for (auto _ : state) benchmark::DoNotOptimize(scan_serial(cfg));
}
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
    auto cfg = scan_config();
    cfg.threads = hw_threads();
    for (auto _ : state) benchmark::DoNotOptimize(scan(cfg));
    state.counters["threads"] = cfg.threads;
}
BENCHMARK(BM_ScanParallel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
