#include "monoseg/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monoseg {

namespace {

// The outermost selected extrema are replaced by the series endpoints. With
// exactly two selected extrema and budget to spare, the earlier one stays as
// an interior breakpoint: folding both into the endpoints can flip the
// segment direction and lose the guaranteed error bound.
std::vector<std::size_t> breakpoints_from_selection(std::vector<std::size_t> chosen,
                                                    std::size_t dedup_size,
                                                    bool split_pair) {
    std::sort(chosen.begin(), chosen.end());
    if (chosen.size() <= 1) return {0, dedup_size - 1};

    std::vector<std::size_t> bps;
    bps.reserve(chosen.size());
    bps.push_back(0);
    if (chosen.size() == 2 && split_pair) {
        if (chosen[0] != 0) bps.push_back(chosen[0]);
    } else {
        bps.insert(bps.end(), chosen.begin() + 1, chosen.end() - 1);
    }
    bps.push_back(dedup_size - 1);
    return bps;
}

}  // namespace

Segmentation segment_optimal(std::span<const LabeledExtremum> labeled,
                             std::size_t max_segments,
                             const PreprocessedSeries& series) {
    if (max_segments < 1) throw std::invalid_argument("segment budget must be at least 1");
    if (series.size() < 2 || labeled.size() < 2)
        throw DegenerateSeriesError("degenerate series: nothing to segment");

    std::vector<std::size_t> chosen;
    if (labeled.size() <= max_segments + 1) {
        // the budget admits every extremum; keep the full alternating sequence
        chosen.reserve(labeled.size());
        for (const LabeledExtremum& e : labeled) chosen.push_back(e.pos);
    } else {
        struct Entry {
            double scale;
            std::size_t pos;
        };
        std::vector<Entry> buffer;  // sorted by scale descending, ties in arrival order
        buffer.reserve(max_segments + 3);
        for (const LabeledExtremum& e : labeled) {
            auto it = std::upper_bound(buffer.begin(), buffer.end(), e.scale,
                                       [](double s, const Entry& x) { return s > x.scale; });
            buffer.insert(it, Entry{e.scale, e.pos});
            if (buffer.size() == max_segments + 3) buffer.pop_back();
        }
        // drop the whole tie class of the smallest retained scale
        const double cut_scale = buffer.back().scale;
        for (const Entry& x : buffer)
            if (x.scale > cut_scale) chosen.push_back(x.pos);
    }

    return evaluate_dedup_breakpoints(
        series,
        breakpoints_from_selection(std::move(chosen), series.size(), max_segments >= 2));
}

SpectrumIndex::SpectrumIndex(std::vector<LabeledExtremum> by_position, PreprocessedSeries series)
    : by_position_(std::move(by_position)), series_(std::move(series)) {
    if (series_.size() < 2 || by_position_.size() < 2)
        throw DegenerateSeriesError("degenerate series: nothing to index");

    const std::size_t count = by_position_.size();
    by_scale_.resize(count);
    std::iota(by_scale_.begin(), by_scale_.end(), std::size_t{0});
    std::sort(by_scale_.begin(), by_scale_.end(), [&](std::size_t a, std::size_t b) {
        if (by_position_[a].scale != by_position_[b].scale)
            return by_position_[a].scale > by_position_[b].scale;
        return by_position_[a].pos < by_position_[b].pos;
    });

    earliest_of_scale_.resize(count);
    for (std::size_t r = 0; r < count; ++r) {
        const bool same_as_prev =
            r > 0 && by_position_[by_scale_[r]].scale == by_position_[by_scale_[r - 1]].scale;
        earliest_of_scale_[r] = same_as_prev ? earliest_of_scale_[r - 1] : r;
    }

    whole_series_error_ = segment_omafe(series_.values, 0, series_.size() - 1).error;
}

SpectrumIndex build_spectrum_index(std::vector<LabeledExtremum> labeled, PreprocessedSeries series) {
    return SpectrumIndex(std::move(labeled), std::move(series));
}

SpectrumQuery query_spectrum(const SpectrumIndex& index, std::size_t max_segments) {
    if (max_segments < 1) throw std::invalid_argument("segment budget must be at least 1");
    const std::size_t count = index.extremum_count();
    if (count <= max_segments + 1) return {QueryDescriptor{count}, 0.0};

    // a budget of one admits only the endpoints-only segmentation
    if (max_segments == 1) return {QueryDescriptor{0}, index.whole_series_error()};

    // drop the whole tie class of the (max_segments + 2)-th scale
    const std::size_t cut = index.earliest_of_scale(max_segments + 1);
    if (cut <= 1) return {QueryDescriptor{cut}, index.whole_series_error()};
    if (cut == 2) {
        // the surviving pair splits at its earlier member, unless that is
        // already the first sample and the segmentation collapses
        const std::size_t earlier = std::min(index.by_scale(0).pos, index.by_scale(1).pos);
        if (earlier == 0) return {QueryDescriptor{2}, index.whole_series_error()};
    }
    return {QueryDescriptor{cut}, index.by_scale(cut).scale / 2.0};
}

Segmentation materialize(const SpectrumIndex& index, QueryDescriptor cut) {
    if (cut.included_ranks > index.extremum_count())
        throw std::invalid_argument("descriptor does not match this index");

    std::vector<std::size_t> chosen;
    chosen.reserve(cut.included_ranks);
    for (std::size_t r = 0; r < cut.included_ranks; ++r) chosen.push_back(index.by_scale(r).pos);

    return evaluate_dedup_breakpoints(
        index.series(),
        breakpoints_from_selection(std::move(chosen), index.series().size(), true));
}

std::vector<std::pair<std::size_t, double>> spectrum_curve(const SpectrumIndex& index,
                                                           std::size_t max_k) {
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(max_k);
    for (std::size_t k = 1; k <= max_k; ++k) out.emplace_back(k, query_spectrum(index, k).omafe);
    return out;
}

}  // namespace monoseg
