#include <benchmark/benchmark.h>

#include <random>

#include "effprice/effprice.hpp"

using namespace effprice;

static void BM_DiscountFactor(benchmark::State& state) {
    const PeriodicRate r(0.00375);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discount_factor(r, 360));
    }
}
BENCHMARK(BM_DiscountFactor);

static void BM_BuildGrid(benchmark::State& state) {
    GridSpec spec;
    spec.rate_step = 0.00125 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_grid(spec));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(spec.row_count()) * 13);
}
BENCHMARK(BM_BuildGrid)->Arg(1)->Arg(10)->Arg(100);

static void BM_Neutralize(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> step(-0.01, 0.02), rate(0.03, 0.08);
    std::vector<double> h{100.0}, r(n + 2);
    for (std::size_t i = 1; i < n; ++i) h.push_back(h.back() * (1.0 + step(rng)));
    for (double& x : r) x = rate(rng);
    const MonthlySeries hpi(SeriesKind::IndexLevel, YearMonth(1950, 3), h);
    const MonthlySeries rates(SeriesKind::QuotedRate, YearMonth(1950, 1), r);
    const LoanTerms terms;
    for (auto _ : state) {
        benchmark::DoNotOptimize(neutralize(hpi, rates, terms));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_Neutralize)->Arg(420)->Arg(4200);

BENCHMARK_MAIN();
