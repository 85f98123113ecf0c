#pragma once

#include <cstddef>
#include <vector>

#include "monoseg/segmentation.hpp"
#include "monoseg/series.hpp"

namespace monoseg {

/// Prefix sums of x, y, x^2, xy and y^2 (one leading zero entry each),
/// giving the least-squares error of any index range in constant time.
/// Extended precision keeps the range differences from cancelling on long
/// series.
struct RangeMoments {
    std::vector<long double> sum_x;
    std::vector<long double> sum_y;
    std::vector<long double> sum_xx;
    std::vector<long double> sum_xy;
    std::vector<long double> sum_yy;

    std::size_t size() const noexcept { return sum_x.empty() ? 0 : sum_x.size() - 1; }
};

RangeMoments build_moments(const TimeSeries& series);

/// Sum of squared residuals of the least-squares line over samples [p, q]
/// inclusive. Ranges of one or two points fit exactly; the result is
/// clamped at 0 to absorb rounding.
double regression_error(const RangeMoments& m, std::size_t p, std::size_t q);

struct LinearRange {
    std::size_t first;
    std::size_t last;  // inclusive
    double sse;
};

/// Disjoint inclusive ranges covering the series in order; consecutive
/// ranges abut exactly (next.first == previous.last + 1).
struct LinearSegmentation {
    std::vector<LinearRange> ranges;
};

/// Top-down piecewise-linear heuristic: repeatedly splits the range with
/// the largest error (ties leftmost) at the point minimizing the summed
/// error of the two pieces (ties smallest index), until max_ranges ranges
/// exist or every range has fewer than 3 points.
LinearSegmentation top_down(const TimeSeries& series, std::size_t max_ranges);

/// Bottom-up piecewise-linear heuristic: starts from singleton ranges and
/// repeatedly merges the adjacent pair with the smallest merge cost (ties
/// leftmost) until target_ranges remain. Naive scan per merge.
LinearSegmentation bottom_up(const TimeSeries& series, std::size_t target_ranges);

/// Converts abutting ranges to shared-endpoint breakpoints, merges
/// consecutive segments of equal sign (zero counts as positive), and
/// evaluates the result on the deduplicated view.
Segmentation aggregate_signs(const TimeSeries& series, const LinearSegmentation& lin);

}  // namespace monoseg
