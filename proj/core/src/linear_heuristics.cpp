#include "monoseg/linear_heuristics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace monoseg {

RangeMoments build_moments(const TimeSeries& series) {
    if (series.empty()) throw std::invalid_argument("build_moments: empty series");

    const std::size_t n = series.size();
    RangeMoments m;
    m.sum_x.assign(n + 1, 0.0);
    m.sum_y.assign(n + 1, 0.0);
    m.sum_xx.assign(n + 1, 0.0);
    m.sum_xy.assign(n + 1, 0.0);
    m.sum_yy.assign(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const long double x = series.xs[i], y = series.ys[i];
        m.sum_x[i + 1] = m.sum_x[i] + x;
        m.sum_y[i + 1] = m.sum_y[i] + y;
        m.sum_xx[i + 1] = m.sum_xx[i] + x * x;
        m.sum_xy[i + 1] = m.sum_xy[i] + x * y;
        m.sum_yy[i + 1] = m.sum_yy[i] + y * y;
    }
    return m;
}

double regression_error(const RangeMoments& m, std::size_t p, std::size_t q) {
    if (p > q || q >= m.size()) throw std::out_of_range("regression_error: bad range");
    const long double count = static_cast<long double>(q - p + 1);
    if (count <= 2.0L) return 0.0;  // a line interpolates one or two points

    const long double sx = m.sum_x[q + 1] - m.sum_x[p];
    const long double sy = m.sum_y[q + 1] - m.sum_y[p];
    const long double sxx = m.sum_xx[q + 1] - m.sum_xx[p];
    const long double sxy = m.sum_xy[q + 1] - m.sum_xy[p];
    const long double syy = m.sum_yy[q + 1] - m.sum_yy[p];

    const long double sxx_c = sxx - sx * sx / count;
    const long double sxy_c = sxy - sx * sy / count;
    const long double syy_c = syy - sy * sy / count;

    // x is strictly increasing so sxx_c > 0 short of catastrophic rounding
    const long double sse = sxx_c > 0.0L ? syy_c - sxy_c * sxy_c / sxx_c : syy_c;
    return std::max(static_cast<double>(sse), 0.0);
}

LinearSegmentation top_down(const TimeSeries& series, std::size_t max_ranges) {
    if (max_ranges < 1) throw std::invalid_argument("range budget must be at least 1");
    if (series.empty()) throw std::invalid_argument("top_down: empty series");

    const RangeMoments m = build_moments(series);
    const std::size_t n = series.size();

    LinearSegmentation out;
    out.ranges.push_back({0, n - 1, regression_error(m, 0, n - 1)});

    while (out.ranges.size() < max_ranges) {
        // leftmost splittable range (3+ points) with the largest error
        std::size_t best = out.ranges.size();
        double best_err = -1.0;
        for (std::size_t idx = 0; idx < out.ranges.size(); ++idx) {
            const LinearRange& r = out.ranges[idx];
            if (r.last - r.first >= 2 && r.sse > best_err) {
                best = idx;
                best_err = r.sse;
            }
        }
        if (best == out.ranges.size()) break;  // nothing left to split

        const std::size_t i = out.ranges[best].first;
        const std::size_t j = out.ranges[best].last;
        std::size_t best_l = i;
        double best_split = std::numeric_limits<double>::infinity();
        for (std::size_t l = i; l < j; ++l) {
            const double e = regression_error(m, i, l) + regression_error(m, l + 1, j);
            if (e < best_split) {
                best_split = e;
                best_l = l;
            }
        }

        out.ranges[best] = {i, best_l, regression_error(m, i, best_l)};
        out.ranges.insert(out.ranges.begin() + static_cast<std::ptrdiff_t>(best) + 1,
                          {best_l + 1, j, regression_error(m, best_l + 1, j)});
    }
    return out;
}

LinearSegmentation bottom_up(const TimeSeries& series, std::size_t target_ranges) {
    const std::size_t n = series.size();
    if (target_ranges < 1 || target_ranges > n)
        throw std::invalid_argument("range budget out of range");

    const RangeMoments m = build_moments(series);
    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // ranges form a linked list keyed by their first sample index
    std::vector<std::size_t> next(n), prev(n), last(n);
    std::vector<double> sse(n, 0.0), merge_cost(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        next[i] = i + 1 < n ? i + 1 : npos;
        prev[i] = i > 0 ? i - 1 : npos;
        last[i] = i;
    }
    const auto cost_of = [&](std::size_t a) {
        const std::size_t b = next[a];
        return regression_error(m, a, last[b]) - sse[a] - sse[b];
    };
    for (std::size_t i = 0; i + 1 < n; ++i) merge_cost[i] = cost_of(i);

    std::size_t alive = n;
    while (alive > target_ranges) {
        std::size_t best = npos;
        double best_cost = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; next[a] != npos; a = next[a]) {
            if (merge_cost[a] < best_cost) {
                best_cost = merge_cost[a];
                best = a;
            }
        }

        const std::size_t b = next[best];
        last[best] = last[b];
        sse[best] = regression_error(m, best, last[best]);
        next[best] = next[b];
        if (next[best] != npos) {
            prev[next[best]] = best;
            merge_cost[best] = cost_of(best);
        }
        if (prev[best] != npos) merge_cost[prev[best]] = cost_of(prev[best]);
        --alive;
    }

    LinearSegmentation out;
    out.ranges.reserve(alive);
    for (std::size_t a = 0; a != npos; a = next[a]) out.ranges.push_back({a, last[a], sse[a]});
    return out;
}

Segmentation aggregate_signs(const TimeSeries& series, const LinearSegmentation& lin) {
    if (lin.ranges.empty() || lin.ranges.front().first != 0 ||
        lin.ranges.back().last != series.size() - 1)
        throw std::invalid_argument("ranges must cover the series");

    const std::size_t n = series.size();

    // shared-endpoint breakpoints: each boundary becomes the start of the
    // following range; a trailing zero-length segment is dropped
    std::vector<std::size_t> bps{0};
    for (std::size_t k = 1; k < lin.ranges.size(); ++k) bps.push_back(lin.ranges[k].first);
    if (bps.back() != n - 1) bps.push_back(n - 1);

    PreprocessedSeries pre = dedup_consecutive(series);
    if (bps.size() < 2) return trivial_segmentation(pre);  // single-sample series

    std::vector<std::size_t> merged{bps[0]};
    int prev_sign = 0;
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
        const int sign = series.ys[bps[k + 1]] >= series.ys[bps[k]] ? 1 : -1;
        if (merged.size() == 1 || sign != prev_sign) {
            merged.push_back(bps[k + 1]);
            prev_sign = sign;
        } else {
            merged.back() = bps[k + 1];
        }
    }

    return evaluate_source_breakpoints(pre, std::move(merged));
}

}  // namespace monoseg
