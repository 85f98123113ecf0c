#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "monoseg/scale_labeling.hpp"
#include "monoseg/segmentation.hpp"
#include "monoseg/series.hpp"

namespace monoseg {

/// Labeled extrema sorted by scale, with for every rank a link to the
/// earliest rank of the same scale. Built in O(n log n); immutable
/// afterwards, so concurrent queries are safe. Answers "best segmentation
/// within a budget" queries in constant time.
class SpectrumIndex {
public:
    SpectrumIndex(std::vector<LabeledExtremum> by_position, PreprocessedSeries series);

    std::size_t extremum_count() const noexcept { return by_position_.size(); }
    const std::vector<LabeledExtremum>& by_position() const noexcept { return by_position_; }

    /// Extremum at the given rank of the scale-descending order (ties by
    /// ascending position).
    const LabeledExtremum& by_scale(std::size_t rank) const { return by_position_[by_scale_.at(rank)]; }

    /// Smallest rank sharing the scale of the given rank.
    std::size_t earliest_of_scale(std::size_t rank) const { return earliest_of_scale_.at(rank); }

    /// Error of the whole series as one segment, used when a query keeps
    /// two or fewer extrema and the segmentation collapses to the endpoints.
    double whole_series_error() const noexcept { return whole_series_error_; }

    const PreprocessedSeries& series() const noexcept { return series_; }

private:
    std::vector<LabeledExtremum> by_position_;
    std::vector<std::size_t> by_scale_;  // indices into by_position_
    std::vector<std::size_t> earliest_of_scale_;
    PreprocessedSeries series_;
    double whole_series_error_ = 0.0;
};

/// Prefix of the scale-descending order selected by a query. Rank count
/// 0 or 1 materializes to the endpoints-only segmentation.
struct QueryDescriptor {
    std::size_t included_ranks = 0;
};

struct SpectrumQuery {
    QueryDescriptor cut;
    double omafe = 0.0;
};

/// Optimal segmentation with at most max_segments segments, selected by
/// scale. When the budget admits every extremum the full alternating
/// sequence is returned (error 0); otherwise the max_segments + 2 largest
/// scales are collected in one scan and the whole smallest-scale tie class
/// is dropped. The outermost selected extrema are replaced by the series
/// endpoints. O(n * max_segments).
Segmentation segment_optimal(std::span<const LabeledExtremum> labeled,
                             std::size_t max_segments,
                             const PreprocessedSeries& series);

SpectrumIndex build_spectrum_index(std::vector<LabeledExtremum> labeled,
                                   PreprocessedSeries series);

/// Constant-time query: the included ranks and the resulting error. The
/// error is half the largest excluded scale, except when two or fewer
/// extrema survive (the segmentation collapses to the endpoints and the
/// precomputed whole-series error applies) or nothing is excluded (0).
SpectrumQuery query_spectrum(const SpectrumIndex& index, std::size_t max_segments);

/// Turns a descriptor into a concrete segmentation: position-sorts the
/// included extrema, substitutes the series endpoints, and evaluates the
/// segments. O(k log k) for k included extrema.
Segmentation materialize(const SpectrumIndex& index, QueryDescriptor cut);

/// (k, error) for k = 1..max_k; non-increasing in k.
std::vector<std::pair<std::size_t, double>> spectrum_curve(const SpectrumIndex& index,
                                                           std::size_t max_k);

}  // namespace monoseg
