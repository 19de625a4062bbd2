#include "diffpass/oracle.hpp"
#include "diffpass/passivity.hpp"
#include "diffpass/syzygy.hpp"

#include <benchmark/benchmark.h>

using namespace diffpass;

namespace {

const Ambient kPlane{2, 1};

Derivative du(std::uint32_t a, std::uint32_t b) { return {1, MultiIndex{a, b}}; }

SolvedSystem riccati() {
    auto u = DiffPoly::u(kPlane, 1, {0, 0});
    return SolvedSystem(Ranking::orderly(kPlane), {SolvedForm(du(1, 0), -(u * u)), SolvedForm(du(0, 1), -(u * u))});
}

SolvedSystem heat() {
    return SolvedSystem(Ranking::orderly(kPlane), {SolvedForm(du(2, 0), -DiffPoly::u(kPlane, 1, {0, 1}))});
}

} // namespace

static void BM_TotalDerivative(benchmark::State& state) {
    auto x = DiffPoly::x(kPlane, 1);
    auto u = DiffPoly::u(kPlane, 1, {1, 1});
    auto f = power(x * u + DiffPoly::u(kPlane, 1, {0, 2}), 3);
    for (auto _ : state) benchmark::DoNotOptimize(total_derivative_multi(f, MultiIndex{1, static_cast<std::uint32_t>(state.range(0))}));
}
BENCHMARK(BM_TotalDerivative)->DenseRange(0, 3);

static void BM_ReduceHeat(benchmark::State& state) {
    auto sys = heat();
    auto order = static_cast<std::uint32_t>(state.range(0));
    auto f = DiffPoly::u(kPlane, 1, MultiIndex{order, 1});
    for (auto _ : state) benchmark::DoNotOptimize(reduce(f, sys));
}
BENCHMARK(BM_ReduceHeat)->RangeMultiplier(2)->Range(2, 16);

static void BM_ReduceRiccati(benchmark::State& state) {
    auto sys = riccati();
    auto order = static_cast<std::uint32_t>(state.range(0));
    auto f = DiffPoly::u(kPlane, 1, MultiIndex{order, order});
    for (auto _ : state) benchmark::DoNotOptimize(reduce(f, sys));
}
BENCHMARK(BM_ReduceRiccati)->DenseRange(1, 3);

static void BM_IsPassive(benchmark::State& state) {
    auto sys = riccati();
    PassivityOptions opts;
    opts.order_bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(is_passive(sys, opts));
}
BENCHMARK(BM_IsPassive)->DenseRange(2, 4);

static void BM_SyzygyOracle(benchmark::State& state) {
    std::vector<Derivative> leads{{1, MultiIndex{2, 0, 0}}, {1, MultiIndex{0, 1, 1}}, {1, MultiIndex{1, 0, 2}},
                                  {1, MultiIndex{0, 3, 0}}};
    for (auto _ : state) benchmark::DoNotOptimize(syzygy_oracle(leads, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SyzygyOracle)->DenseRange(2, 5);

static void BM_Membership(benchmark::State& state) {
    auto sys = riccati();
    auto f = DiffPoly::u(kPlane, 1, {1, 1});
    auto target = f - reduce(f, sys).remainder;
    auto gens = prolongation_polys(sys, 2);
    for (auto _ : state) benchmark::DoNotOptimize(membership({target, gens, static_cast<std::uint64_t>(state.range(0)), 2}));
}
BENCHMARK(BM_Membership)->DenseRange(1, 3);

static void BM_Audit(benchmark::State& state) {
    auto r = Ranking::orderly({3, 2});
    AuditOptions opts;
    opts.exhaustive_order = static_cast<std::uint64_t>(state.range(0));
    opts.sample_budget = 1000;
    for (auto _ : state) benchmark::DoNotOptimize(audit_compatibility(r, opts));
}
BENCHMARK(BM_Audit)->DenseRange(2, 5);
BENCHMARK_MAIN();
