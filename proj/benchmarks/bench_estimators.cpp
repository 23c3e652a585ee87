#include <benchmark/benchmark.h>

#include "censtail/asymptotics.hpp"
#include "censtail/empirical.hpp"
#include "censtail/estimators.hpp"
#include "censtail/simulation.hpp"

using namespace censtail;

namespace {

OrderedSample bench_sample(std::size_t n)
{
    return order_sample(
        sample_contaminated_censored(n, ModelParams::from_p(0.3, 0.7, 0.25), {0.1, 0.6}, 7));
}

void BM_Weights(benchmark::State& st)
{
    const auto s = bench_sample(static_cast<std::size_t>(st.range(0)) * 2);
    const auto k = static_cast<std::size_t>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(mdpd_weights(s, k));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Weights)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_MdpdEstimate(benchmark::State& st)
{
    const auto s = bench_sample(2000);
    const TailConfig cfg{static_cast<std::size_t>(st.range(0)), 0.3};
    for (auto _ : st)
        benchmark::DoNotOptimize(mdpd_estimate(s, cfg).gamma1_hat);
}
BENCHMARK(BM_MdpdEstimate)->Arg(50)->Arg(200)->Arg(800);

void BM_Sampler(benchmark::State& st)
{
    const auto m = ModelParams::from_p(0.3, 0.55, 0.25);
    std::uint64_t r = 0;
    for (auto _ : st)
        benchmark::DoNotOptimize(sample_contaminated_censored(1000, m, {0.4, 0.6}, 1, r++));
}
BENCHMARK(BM_Sampler);

void BM_SigmaSquared(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(sigma_squared(0.5, 0.3, 0.7));
}
BENCHMARK(BM_SigmaSquared)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
