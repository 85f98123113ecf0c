#include "monoseg/scale_labeling.hpp"

#include <cmath>
#include <utility>

namespace monoseg {

namespace {

template <class AfterPush>
std::vector<LabeledExtremum> label_impl(const PreprocessedSeries& series,
                                        std::span<const Extremum> extrema,
                                        AfterPush&& after_push) {
    if (extrema.size() < 2)
        throw DegenerateSeriesError("degenerate series: fewer than 2 extrema to label");

    const auto& v = series.values;
    std::vector<double> scale(extrema.size(), 0.0);
    std::vector<std::size_t> stack;  // indices into extrema, bottom first
    stack.reserve(extrema.size());

    const auto value_at = [&](std::size_t k) { return v[extrema[k].pos]; };
    // gap between the top two stack entries
    const auto top_gap = [&] {
        return std::abs(value_at(stack[stack.size() - 1]) - value_at(stack[stack.size() - 2]));
    };
    // does the new extremum reach at least as far as the second-from-top?
    const auto reaches_second = [&](std::size_t k) {
        const double second = value_at(stack[stack.size() - 2]);
        return extrema[k].kind == ExtremumKind::minimum ? value_at(k) <= second
                                                        : value_at(k) >= second;
    };

    for (std::size_t k = 0; k < extrema.size(); ++k) {
        while (stack.size() > 2 && reaches_second(k)) {
            const double gap = top_gap();
            scale[stack[stack.size() - 1]] = gap;
            scale[stack[stack.size() - 2]] = gap;
            stack.pop_back();
            stack.pop_back();
        }
        if (stack.size() == 2 && reaches_second(k)) {
            // new running global extreme; the old one is fully resolved
            scale[stack[0]] = top_gap();
            stack.erase(stack.begin());
        }
        stack.push_back(k);
        after_push(std::span<const std::size_t>(stack));
    }

    while (stack.size() > 2) {
        scale[stack.back()] = top_gap();
        stack.pop_back();
    }
    const double gap = top_gap();
    scale[stack[0]] = gap;
    scale[stack[1]] = gap;

    std::vector<LabeledExtremum> out;
    out.reserve(extrema.size());
    for (std::size_t k = 0; k < extrema.size(); ++k)
        out.push_back({extrema[k].pos, extrema[k].kind, scale[k]});
    return out;
}

}  // namespace

std::vector<LabeledExtremum> label_extrema(const PreprocessedSeries& series,
                                           std::span<const Extremum> extrema) {
    return label_impl(series, extrema, [](std::span<const std::size_t>) {});
}

std::vector<LabeledExtremum> label_extrema_traced(const PreprocessedSeries& series,
                                                  std::span<const Extremum> extrema,
                                                  const StackTrace& after_push) {
    return label_impl(series, extrema, [&](std::span<const std::size_t> s) {
        if (after_push) after_push(s);
    });
}

}  // namespace monoseg
