#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "monoseg/linear_heuristics.hpp"
#include "monoseg/random_walk.hpp"
#include "monoseg/scale_labeling.hpp"
#include "monoseg/series.hpp"
#include "monoseg/spectrum.hpp"

namespace {

using namespace monoseg;

TimeSeries make_walk(std::size_t n) {
    TimeSeries series;
    series.ys = random_walk(n, 42);
    series.xs.resize(n);
    for (std::size_t i = 0; i < n; ++i) series.xs[i] = static_cast<double>(i);
    return series;
}

void BM_LabelExtrema(benchmark::State& state) {
    const auto series = make_walk(static_cast<std::size_t>(state.range(0)));
    const auto pre = dedup_consecutive(series);
    const auto extrema = find_extrema(pre);
    for (auto _ : state) {
        auto labeled = label_extrema(pre, extrema);
        benchmark::DoNotOptimize(labeled);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LabelExtrema)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_SegmentOptimal(benchmark::State& state) {
    const auto series = make_walk(static_cast<std::size_t>(state.range(0)));
    const auto pre = dedup_consecutive(series);
    const auto labeled = label_extrema(pre, find_extrema(pre));
    for (auto _ : state) {
        auto seg = segment_optimal(labeled, 20, pre);
        benchmark::DoNotOptimize(seg);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SegmentOptimal)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_BuildSpectrumIndex(benchmark::State& state) {
    const auto series = make_walk(static_cast<std::size_t>(state.range(0)));
    const auto pre = dedup_consecutive(series);
    const auto labeled = label_extrema(pre, find_extrema(pre));
    for (auto _ : state) {
        auto index = build_spectrum_index(labeled, pre);
        benchmark::DoNotOptimize(index);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildSpectrumIndex)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

void BM_QuerySpectrum(benchmark::State& state) {
    const auto series = make_walk(static_cast<std::size_t>(state.range(0)));
    const auto pre = dedup_consecutive(series);
    const SpectrumIndex index = build_spectrum_index(label_extrema(pre, find_extrema(pre)), pre);
    const std::size_t m = index.extremum_count();
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(query_spectrum(index, 1 + k++ % m));
    }
}
BENCHMARK(BM_QuerySpectrum)->Range(1 << 10, 1 << 20);

void BM_TopDown(benchmark::State& state) {
    const auto series = make_walk(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto lin = top_down(series, 20);
        benchmark::DoNotOptimize(lin);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TopDown)->Range(1 << 10, 1 << 17)->Complexity(benchmark::oN);

void BM_BottomUp(benchmark::State& state) {
    const auto series = make_walk(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto lin = bottom_up(series, 20);
        benchmark::DoNotOptimize(lin);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BottomUp)->Range(1 << 10, 1 << 14)->Complexity(benchmark::oNSquared);

void BM_RegressionError(benchmark::State& state) {
    const auto series = make_walk(1 << 16);
    const RangeMoments m = build_moments(series);
    std::size_t p = 0;
    for (auto _ : state) {
        p = (p + 4093) % (series.size() / 2);
        benchmark::DoNotOptimize(regression_error(m, p, p + series.size() / 2 - 1));
    }
}
BENCHMARK(BM_RegressionError);

}  // namespace

BENCHMARK_MAIN();
