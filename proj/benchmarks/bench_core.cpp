#include "mixnum/blind_id.hpp"
#include "mixnum/channel.hpp"
#include "mixnum/fft.hpp"
#include "mixnum/rng.hpp"
#include "mixnum/waveform.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace mixnum;

namespace {

std::vector<cd> random_signal(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cd> x(n);
    for (auto& v : x) v = cd(rng.gaussian(), rng.gaussian());
    return x;
}

void bm_dft(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_signal(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(dft(x));
    state.SetComplexityN(state.range(0));
}

void bm_correlation_metric(benchmark::State& state) {
    const int n_fft = static_cast<int>(state.range(0));
    const int n_cp = n_fft / 16;
    const auto y = random_signal(static_cast<std::size_t>(8 * (n_fft + n_cp)), 2);
    NumerologyConfig cfg;
    cfg.n_fft = n_fft;
    cfg.n_cp = n_cp;
    for (auto _ : state) benchmark::DoNotOptimize(cp_correlation_metric(y, cfg));
    state.SetComplexityN(state.range(0));
}

void bm_identify(benchmark::State& state) {
    const int n_fft = static_cast<int>(state.range(0));
    BaseParams base;
    base.n_fft0 = n_fft;
    base.m_active0 = n_fft / 4;
    const auto plan = validate_scenario({{0, 1}}, base);
    Rng rng(3);
    const auto frames = build_scenario_frames(plan, 8, rng);
    const auto& y = frames[0].samples;
    for (auto _ : state) benchmark::DoNotOptimize(identify(y, plan));
    state.SetComplexityN(state.range(0));
}

void bm_scenario_frames(benchmark::State& state) {
    const auto plan = validate_scenario(reference_scenario(1), BaseParams{});
    std::uint64_t seed = 4;
    for (auto _ : state) {
        Rng rng(seed++);
        benchmark::DoNotOptimize(build_scenario_frames(plan, 16, rng));
    }
}

BENCHMARK(bm_dft)->RangeMultiplier(2)->Range(256, 8192)->Complexity(benchmark::oNLogN);
BENCHMARK(bm_correlation_metric)
    ->RangeMultiplier(2)
    ->Range(512, 8192)
    ->Complexity(benchmark::oN);
BENCHMARK(bm_identify)->RangeMultiplier(2)->Range(512, 8192)->Complexity();
BENCHMARK(bm_scenario_frames);

} // namespace

BENCHMARK_MAIN();
