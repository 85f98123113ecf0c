#pragma once

#include <cstddef>
#include <vector>

#include "monoseg/monotone_fit.hpp"
#include "monoseg/series.hpp"

namespace monoseg {

/// A monotone segmentation reported against the original (non-deduplicated)
/// series. Breakpoints are sorted source indices, first 0 and last n-1;
/// segment k covers the inclusive interval [breakpoints[k], breakpoints[k+1]].
/// For a source series with fewer than two distinct samples the trivial
/// segmentation has breakpoints {0, n-1} (degenerating to {0, 0} for a
/// single sample) and one flat segment of error 0.
struct Segmentation {
    std::vector<std::size_t> breakpoints;
    std::vector<Direction> directions;
    std::vector<double> per_segment_error;
    double total_error = 0.0;

    std::size_t segment_count() const noexcept {
        return breakpoints.size() < 2 ? 0 : breakpoints.size() - 1;
    }
};

/// Evaluates breakpoints given as deduplicated positions and reports them in
/// source positions (the final breakpoint is extended over the source tail
/// run).
Segmentation evaluate_dedup_breakpoints(const PreprocessedSeries& series,
                                        const std::vector<std::size_t>& dedup_breakpoints);

/// Evaluates breakpoints given as source positions; errors are computed on
/// the deduplicated view.
Segmentation evaluate_source_breakpoints(const PreprocessedSeries& series,
                                         std::vector<std::size_t> source_breakpoints);

/// One flat segment covering the whole source range, error 0.
Segmentation trivial_segmentation(const PreprocessedSeries& series);

}  // namespace monoseg
