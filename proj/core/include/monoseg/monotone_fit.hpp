#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace monoseg {

enum class Direction { increasing, decreasing, flat };

const char* to_string(Direction dir) noexcept;

/// Direction of a segment from its endpoint values; equal endpoints give flat.
Direction endpoint_direction(double first, double last) noexcept;

/// Running envelopes of a value range. For the increasing direction upper is
/// the prefix maximum and lower the suffix minimum; for decreasing, upper is
/// the suffix maximum and lower the prefix minimum.
struct Envelopes {
    std::vector<double> upper;
    std::vector<double> lower;
};

Envelopes monotone_envelopes(std::span<const double> values, Direction direction);

/// Best monotone approximation of a value range under the l-infinity norm:
/// the pointwise midpoint of the envelopes, with error half the widest
/// envelope gap. For the flat direction the fit is the constant midrange.
struct MonotoneFit {
    std::vector<double> fit;
    double error = 0.0;
};

MonotoneFit best_monotone_fit(std::span<const double> values, Direction direction);

struct SegmentEval {
    Direction direction;
    double error;
};

/// Direction and l-infinity error of the inclusive slice [lo, hi]; the
/// direction comes from the sign of values[hi] - values[lo].
SegmentEval segment_omafe(std::span<const double> values, std::size_t lo, std::size_t hi);

struct SegmentationEval {
    double total = 0.0;
    std::vector<SegmentEval> per_segment;
};

/// Per-segment direction/error and their maximum for a breakpoint list.
/// Breakpoints must be sorted and distinct, starting at 0 and ending at
/// values.size() - 1; segments share their endpoint samples.
SegmentationEval segmentation_omafe(std::span<const double> values,
                                    std::span<const std::size_t> breakpoints);

}  // namespace monoseg
