#include <benchmark/benchmark.h>

#include <cstdint>

#include "wafom/bounds.hpp"
#include "wafom/f2.hpp"
#include "wafom/qmc.hpp"
#include "wafom/wafom.hpp"
#include "wafom/weights.hpp"

namespace {

constexpr std::uint64_t kSeed = 1;

// Fixed 4x8 shape (32 cells): m sweeps the enumeration cost on both routes,
// 2^(32-m) dual elements against 2^m points.

void BM_WafomDual(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const wafom::Subspace p = wafom::random_net(4, 8, m, kSeed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wafom::wafom_dual(p).value);
    }
}
BENCHMARK(BM_WafomDual)->Arg(14)->Arg(18)->Arg(22);

void BM_WafomPoints(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const wafom::Subspace p = wafom::random_net(4, 8, m, kSeed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wafom::wafom_points(p).value);
    }
}
BENCHMARK(BM_WafomPoints)->Arg(10)->Arg(14)->Arg(18);

void BM_WafomExact(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const wafom::Subspace p = wafom::random_net(4, 8, m, kSeed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wafom::wafom_exact_value(p).exact->sign());
    }
}
BENCHMARK(BM_WafomExact)->Arg(10)->Arg(14);

void BM_MinWeight(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const wafom::Subspace d =
        wafom::dual(wafom::random_net(4, 8, m, kSeed));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wafom::min_weight(d));
    }
}
BENCHMARK(BM_MinWeight)->Arg(14)->Arg(18)->Arg(22);

void BM_Dual(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const wafom::Subspace p = wafom::random_net(8, 16, m, kSeed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wafom::dual(p).dim());
    }
}
BENCHMARK(BM_Dual)->Arg(16)->Arg(64)->Arg(112);

void BM_Witness(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const wafom::Subspace p = wafom::random_net(4, 8, m, kSeed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wafom::witness(p).is_zero());
    }
}
BENCHMARK(BM_Witness)->Arg(8)->Arg(16)->Arg(24);

void BM_RandomNet(benchmark::State& state) {
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wafom::random_net(8, 16, 64, wafom::derive_seed(kSeed, i++)).dim());
    }
}
BENCHMARK(BM_RandomNet);

}  // namespace

BENCHMARK_MAIN();
