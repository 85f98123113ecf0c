#include "monoseg/segmentation.hpp"

#include <stdexcept>
#include <utility>

namespace monoseg {

Segmentation evaluate_dedup_breakpoints(const PreprocessedSeries& series,
                                        const std::vector<std::size_t>& dedup_breakpoints) {
    const SegmentationEval eval = segmentation_omafe(series.values, dedup_breakpoints);

    Segmentation out;
    out.breakpoints.reserve(dedup_breakpoints.size());
    for (const std::size_t p : dedup_breakpoints) out.breakpoints.push_back(series.origin_index[p]);
    out.breakpoints.back() = series.source_size - 1;  // extend over the tail run

    out.directions.reserve(eval.per_segment.size());
    out.per_segment_error.reserve(eval.per_segment.size());
    for (const SegmentEval& seg : eval.per_segment) {
        out.directions.push_back(seg.direction);
        out.per_segment_error.push_back(seg.error);
    }
    out.total_error = eval.total;
    return out;
}

Segmentation evaluate_source_breakpoints(const PreprocessedSeries& series,
                                         std::vector<std::size_t> source_breakpoints) {
    if (source_breakpoints.size() < 2) throw std::invalid_argument("segmentation needs at least 2 breakpoints");
    if (source_breakpoints.front() != 0 || source_breakpoints.back() != series.source_size - 1)
        throw std::invalid_argument("breakpoints must start at 0 and end at the last source index");
    for (std::size_t k = 0; k + 1 < source_breakpoints.size(); ++k)
        if (source_breakpoints[k] >= source_breakpoints[k + 1])
            throw std::invalid_argument("breakpoints must be sorted and distinct");

    Segmentation out;
    for (std::size_t k = 0; k + 1 < source_breakpoints.size(); ++k) {
        const std::size_t lo = series.position_of_origin(source_breakpoints[k]);
        const std::size_t hi = series.position_of_origin(source_breakpoints[k + 1]);
        const SegmentEval seg = segment_omafe(series.values, lo, hi);
        out.directions.push_back(seg.direction);
        out.per_segment_error.push_back(seg.error);
        out.total_error = std::max(out.total_error, seg.error);
    }
    out.breakpoints = std::move(source_breakpoints);
    return out;
}

Segmentation trivial_segmentation(const PreprocessedSeries& series) {
    if (series.source_size == 0) throw std::invalid_argument("empty series has no segmentation");
    Segmentation out;
    out.breakpoints = {0, series.source_size - 1};
    out.directions = {Direction::flat};
    out.per_segment_error = {0.0};
    out.total_error = 0.0;
    return out;
}

}  // namespace monoseg
