#include "monoseg/monotone_fit.hpp"

#include <algorithm>
#include <stdexcept>

namespace monoseg {

const char* to_string(Direction dir) noexcept {
    switch (dir) {
        case Direction::increasing: return "increasing";
        case Direction::decreasing: return "decreasing";
        default: return "flat";
    }
}

Direction endpoint_direction(double first, double last) noexcept {
    if (last > first) return Direction::increasing;
    if (last < first) return Direction::decreasing;
    return Direction::flat;
}

Envelopes monotone_envelopes(std::span<const double> values, Direction direction) {
    if (values.empty()) throw std::invalid_argument("monotone_envelopes: empty range");
    if (direction == Direction::flat)
        throw std::invalid_argument("monotone_envelopes: envelopes are undefined for the flat direction");

    const std::size_t n = values.size();
    Envelopes env;
    env.upper.resize(n);
    env.lower.resize(n);

    if (direction == Direction::increasing) {
        double run = values[0];
        for (std::size_t i = 0; i < n; ++i) {
            run = std::max(run, values[i]);
            env.upper[i] = run;
        }
        run = values[n - 1];
        for (std::size_t i = n; i-- > 0;) {
            run = std::min(run, values[i]);
            env.lower[i] = run;
        }
    } else {
        double run = values[n - 1];
        for (std::size_t i = n; i-- > 0;) {
            run = std::max(run, values[i]);
            env.upper[i] = run;
        }
        run = values[0];
        for (std::size_t i = 0; i < n; ++i) {
            run = std::min(run, values[i]);
            env.lower[i] = run;
        }
    }
    return env;
}

MonotoneFit best_monotone_fit(std::span<const double> values, Direction direction) {
    if (values.empty()) throw std::invalid_argument("best_monotone_fit: empty range");

    MonotoneFit out;
    if (direction == Direction::flat) {
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        out.fit.assign(values.size(), (*hi + *lo) / 2.0);
        out.error = (*hi - *lo) / 2.0;
        return out;
    }

    const Envelopes env = monotone_envelopes(values, direction);
    out.fit.resize(values.size());
    double widest = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.fit[i] = (env.upper[i] + env.lower[i]) / 2.0;
        widest = std::max(widest, env.upper[i] - env.lower[i]);
    }
    out.error = widest / 2.0;
    return out;
}

SegmentEval segment_omafe(std::span<const double> values, std::size_t lo, std::size_t hi) {
    if (lo > hi || hi >= values.size()) throw std::out_of_range("segment_omafe: bad interval");

    const Direction dir = endpoint_direction(values[lo], values[hi]);
    double gap = 0.0;
    if (dir == Direction::increasing) {
        // widest drop from a running maximum
        double peak = values[lo];
        for (std::size_t i = lo; i <= hi; ++i) {
            peak = std::max(peak, values[i]);
            gap = std::max(gap, peak - values[i]);
        }
    } else if (dir == Direction::decreasing) {
        // widest rise from a running minimum
        double trough = values[lo];
        for (std::size_t i = lo; i <= hi; ++i) {
            trough = std::min(trough, values[i]);
            gap = std::max(gap, values[i] - trough);
        }
    } else {
        double lo_v = values[lo], hi_v = values[lo];
        for (std::size_t i = lo; i <= hi; ++i) {
            lo_v = std::min(lo_v, values[i]);
            hi_v = std::max(hi_v, values[i]);
        }
        gap = hi_v - lo_v;
    }
    return {dir, gap / 2.0};
}

SegmentationEval segmentation_omafe(std::span<const double> values,
                                    std::span<const std::size_t> breakpoints) {
    if (breakpoints.size() < 2) throw std::invalid_argument("segmentation needs at least 2 breakpoints");
    if (breakpoints.front() != 0 || breakpoints.back() != values.size() - 1)
        throw std::invalid_argument("breakpoints must start at 0 and end at the last index");
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k)
        if (breakpoints[k] >= breakpoints[k + 1])
            throw std::invalid_argument("breakpoints must be sorted and distinct");

    SegmentationEval out;
    out.per_segment.reserve(breakpoints.size() - 1);
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        const SegmentEval seg = segment_omafe(values, breakpoints[k], breakpoints[k + 1]);
        out.total = std::max(out.total, seg.error);
        out.per_segment.push_back(seg);
    }
    return out;
}

}  // namespace monoseg
