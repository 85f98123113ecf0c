#include <doctest.h>

#include <random>
#include <vector>

#include "monoseg/scale_labeling.hpp"
#include "oracle/oracle.hpp"
#include "test_util.hpp"

using namespace monoseg;

namespace {

std::vector<double> labels_of(const std::vector<double>& values) {
    const PreprocessedSeries pre = testutil::pre_of(values);
    const auto labeled = label_extrema(pre, find_extrema(pre));
    std::vector<double> out;
    for (const LabeledExtremum& e : labeled) out.push_back(e.scale);
    return out;
}

}  // namespace

TEST_CASE("labels of 1,3,2,4") {
    CHECK(labels_of({1, 3, 2, 4}) == std::vector<double>{3, 1, 1, 3});
}

TEST_CASE("labels of 0,10,9,10,0 demote the first of the equal maxima") {
    CHECK(labels_of({0, 10, 9, 10, 0}) == std::vector<double>{10, 1, 1, 10, 10});
}

TEST_CASE("labels of a two-point series") {
    CHECK(labels_of({0, 5}) == std::vector<double>{5, 5});
}

TEST_CASE("labels of 0,2,1,0,2") {
    // extrema sit at positions 0, 1, 3, 4
    const PreprocessedSeries pre = testutil::pre_of({0, 2, 1, 0, 2});
    const auto labeled = label_extrema(pre, find_extrema(pre));
    REQUIRE(labeled.size() == 4);
    CHECK(labeled[0].pos == 0);
    CHECK(labeled[1].pos == 1);
    CHECK(labeled[2].pos == 3);
    CHECK(labeled[3].pos == 4);
    for (const LabeledExtremum& e : labeled) CHECK(e.scale == 2);
}

TEST_CASE("labeling rejects degenerate input") {
    const PreprocessedSeries pre = testutil::pre_of({7, 7});
    CHECK_THROWS_AS(label_extrema(pre, std::vector<Extremum>{}), DegenerateSeriesError);
}

TEST_CASE("the largest label is the series range and is carried twice") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 80;
        const auto ys =
            trial % 2 == 0 ? testutil::walk_values(n, rng) : testutil::int_values(n, rng, 5);
        const PreprocessedSeries pre = dedup_consecutive(testutil::series_of(ys));
        if (pre.size() < 2) continue;
        const auto labeled = label_extrema(pre, find_extrema(pre));

        const auto [lo, hi] = std::minmax_element(pre.values.begin(), pre.values.end());
        const double range = *hi - *lo;
        std::size_t carriers = 0;
        for (const LabeledExtremum& e : labeled) {
            CHECK(e.scale > 0);
            CHECK(e.scale <= range);
            if (e.scale == range) ++carriers;
        }
        CHECK(carriers >= 2);
    }
}

TEST_CASE("stack discipline and linear-time push/pop accounting") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 120;
        const auto ys = testutil::walk_values(n, rng);
        const PreprocessedSeries pre = dedup_consecutive(testutil::series_of(ys));
        if (pre.size() < 2) continue;
        const auto extrema = find_extrema(pre);

        std::size_t pushes = 0, pops = 0, prev_size = 0;
        label_extrema_traced(pre, extrema, [&](std::span<const std::size_t> stack) {
            ++pushes;
            pops += prev_size + 1 - stack.size();
            prev_size = stack.size();

            // minima strictly increase and maxima strictly decrease, bottom to top
            double last_min = -1e300, last_max = 1e300;
            double lowest = 1e300, highest = -1e300;
            for (const std::size_t k : stack) {
                const double v = pre.values[extrema[k].pos];
                if (extrema[k].kind == ExtremumKind::minimum) {
                    CHECK(v > last_min);
                    last_min = v;
                } else {
                    CHECK(v < last_max);
                    last_max = v;
                }
                lowest = std::min(lowest, v);
                highest = std::max(highest, v);
            }
            // the two bottom entries are the running global extremes
            if (stack.size() >= 2) {
                const double b0 = pre.values[extrema[stack[0]].pos];
                const double b1 = pre.values[extrema[stack[1]].pos];
                CHECK(std::min(b0, b1) == lowest);
                CHECK(std::max(b0, b1) == highest);
            }
        });
        CHECK(pushes == extrema.size());
        CHECK(pops <= pushes);
    }
}

TEST_CASE("labels match the first-principles oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + rng() % 24;
        const auto ys =
            trial % 2 == 0 ? testutil::int_values(n, rng, 4) : testutil::walk_values(n, rng);
        const PreprocessedSeries pre = dedup_consecutive(testutil::series_of(ys));
        if (pre.size() < 2) continue;

        const auto labeled = label_extrema(pre, find_extrema(pre));
        const auto expected = oracle::scale_labels(pre.values);
        REQUIRE(labeled.size() == expected.size());
        for (std::size_t i = 0; i < labeled.size(); ++i) {
            CHECK(labeled[i].pos == expected[i].first);
            CHECK(labeled[i].scale == expected[i].second);
        }
    }
}
