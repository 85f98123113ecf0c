// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Worked examples are checked exactly; equivalences run against the
// brute-force oracle; timing criteria are host-relative medians.

#if __has_include(<malloc.h>)
#include <malloc.h>
#define MONOSEG_HAVE_MALLOC_H 1
#endif

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "monoseg/linear_heuristics.hpp"
#include "monoseg/random_walk.hpp"
#include "monoseg/scale_labeling.hpp"
#include "monoseg/segmentation.hpp"
#include "monoseg/series.hpp"
#include "monoseg/spectrum.hpp"
#include "oracle/oracle.hpp"

using namespace monoseg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

TimeSeries series_of(std::vector<double> ys) {
    TimeSeries out;
    out.xs.resize(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) out.xs[i] = static_cast<double>(i);
    out.ys = std::move(ys);
    return out;
}

std::vector<double> labels_of(const std::vector<double>& values) {
    const PreprocessedSeries pre = dedup_consecutive(series_of(values));
    std::vector<double> out;
    for (const LabeledExtremum& e : label_extrema(pre, find_extrema(pre))) out.push_back(e.scale);
    return out;
}

std::vector<double> rng_walk(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> step;
    std::vector<double> ys(n);
    for (std::size_t i = 1; i < n; ++i) ys[i] = ys[i - 1] + step(rng);
    return ys;
}

std::vector<double> rng_uniform(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    std::vector<double> ys(n);
    for (double& y : ys) y = value(rng);
    return ys;
}

std::vector<double> rng_ints(std::size_t n, std::mt19937_64& rng, int alphabet) {
    std::vector<double> ys(n);
    for (double& y : ys) y = static_cast<double>(rng() % alphabet);
    return ys;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

// ---------------------------------------------------------------- criteria

bool worked_example_labels(std::string& detail) {
    const std::vector<double> expected{3, 1, 1, 3};
    const auto got = labels_of({1, 3, 2, 4});
    if (got != expected) {
        detail = "labels of 1,3,2,4 differ from 3,1,1,3";
        return false;
    }
    return true;
}

bool worked_example_relabeling(std::string& detail) {
    const std::vector<double> expected{10, 1, 1, 10, 10};
    const auto got = labels_of({0, 10, 9, 10, 0});
    if (got != expected) {
        detail = "labels of 0,10,9,10,0 differ from 10,1,1,10,10";
        return false;
    }
    return true;
}

// all deduplicated sequences over {0,1,2,3} up to length 12 (every raw
// sequence reduces to one of these), plus 10^4 seeded random sequences
bool label_oracle_equivalence(std::string& detail) {
    std::atomic<long> mismatches{0};
    std::atomic<long> checked{0};
    std::string first_bad;
    std::mutex first_bad_mutex;

    const auto check_values = [&](const std::vector<double>& values) {
        const PreprocessedSeries pre = dedup_consecutive(series_of(values));
        if (pre.size() < 2) return;
        const auto fast = label_extrema(pre, find_extrema(pre));
        const auto slow = oracle::scale_labels(pre.values);
        checked.fetch_add(1, std::memory_order_relaxed);
        bool ok = fast.size() == slow.size();
        if (ok)
            for (std::size_t i = 0; i < fast.size(); ++i)
                if (fast[i].pos != slow[i].first || fast[i].scale != slow[i].second) ok = false;
        if (!ok) {
            mismatches.fetch_add(1, std::memory_order_relaxed);
            std::scoped_lock lock(first_bad_mutex);
            if (first_bad.empty()) {
                std::ostringstream os;
                for (const double v : pre.values) os << v << " ";
                first_bad = os.str();
            }
        }
    };

    // four shards by first symbol, spread over the hardware threads
    std::atomic<int> next_shard{0};
    const auto worker = [&] {
        for (int shard = next_shard.fetch_add(1); shard < 4; shard = next_shard.fetch_add(1)) {
            for (int len = 1; len <= 12; ++len) {
                std::vector<int> digit(static_cast<std::size_t>(std::max(len - 1, 0)), 0);
                bool done = false;
                while (!done) {
                    std::vector<double> values(static_cast<std::size_t>(len));
                    values[0] = shard;
                    for (int i = 1; i < len; ++i) {
                        const int choice = digit[static_cast<std::size_t>(i - 1)];
                        values[static_cast<std::size_t>(i)] =
                            choice >= static_cast<int>(values[static_cast<std::size_t>(i - 1)])
                                ? choice + 1
                                : choice;
                    }
                    check_values(values);
                    int i = len - 2;
                    while (i >= 0) {
                        if (++digit[static_cast<std::size_t>(i)] < 3) break;
                        digit[static_cast<std::size_t>(i)] = 0;
                        --i;
                    }
                    if (i < 0) done = true;
                }
            }
        }
    };
    std::vector<std::thread> threads;
    const unsigned thread_count = std::max(2u, std::thread::hardware_concurrency());
    for (unsigned t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();

    std::mt19937_64 rng(20260808);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 2 + rng() % 29;
        check_values(trial % 2 == 0 ? rng_walk(n, rng) : rng_ints(n, rng, 8));
    }

    std::ostringstream os;
    os << checked.load() << " sequences";
    if (mismatches.load() != 0) os << ", " << mismatches.load() << " mismatches, first: " << first_bad;
    detail = os.str();
    return mismatches.load() == 0;
}

bool oracle_optimality(std::string& detail) {
    std::mt19937_64 rng(424242);
    long checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + rng() % 15;
        std::vector<double> values;
        switch (trial % 3) {
            case 0: values = rng_walk(n, rng); break;
            case 1: values = rng_uniform(n, rng); break;
            default: values = rng_ints(n, rng, 6); break;
        }
        const PreprocessedSeries pre = dedup_consecutive(series_of(values));
        if (pre.size() < 2) continue;
        const auto labeled = label_extrema(pre, find_extrema(pre));
        for (std::size_t budget = 1; budget <= 5; ++budget) {
            ++checked;
            const Segmentation seg = segment_optimal(labeled, budget, pre);
            const oracle::OracleResult best = oracle::brute_force_omafe(pre.values, budget);
            if (std::abs(seg.total_error - best.best_error) > 1e-12) {
                std::ostringstream os;
                os << "trial " << trial << " budget " << budget << ": " << seg.total_error
                   << " != " << best.best_error;
                detail = os.str();
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " (sequence, budget) pairs";
    return true;
}

bool spectrum_identity(std::string& detail) {
    std::mt19937_64 rng(515151);
    long checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng() % 199;
        const auto values = trial % 3 == 2 ? rng_ints(n, rng, 10) : rng_walk(n, rng);
        const PreprocessedSeries pre = dedup_consecutive(series_of(values));
        if (pre.size() < 2) continue;
        const auto labeled = label_extrema(pre, find_extrema(pre));
        const SpectrumIndex index = build_spectrum_index(labeled, pre);
        for (std::size_t budget = 1; budget <= index.extremum_count() + 2; ++budget) {
            ++checked;
            const SpectrumQuery q = query_spectrum(index, budget);
            const Segmentation direct = materialize(index, q.cut);
            if (q.omafe != direct.total_error) {
                std::ostringstream os;
                os << "trial " << trial << " budget " << budget << ": query " << q.omafe
                   << " != direct " << direct.total_error;
                detail = os.str();
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " queries, all exact";
    return true;
}

bool monotone_spectrum(std::string& detail) {
    std::mt19937_64 rng(616161);
    // the optimal curve never increases, on every series we try
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 199;
        const auto values = trial % 3 == 2 ? rng_ints(n, rng, 8) : rng_walk(n, rng);
        const PreprocessedSeries pre = dedup_consecutive(series_of(values));
        if (pre.size() < 2) continue;
        const SpectrumIndex index =
            build_spectrum_index(label_extrema(pre, find_extrema(pre)), pre);
        double prev = std::numeric_limits<double>::infinity();
        for (const auto& [k, omafe] : spectrum_curve(index, index.extremum_count() + 2)) {
            if (omafe > prev) {
                std::ostringstream os;
                os << "optimal curve increased at trial " << trial << " k " << k;
                detail = os.str();
                return false;
            }
            prev = omafe;
        }
    }

    // at least one random-walk instance where a heuristic column increases
    // while the optimal column does not
    std::uint64_t spike_seed = 0;
    std::string spike_algo;
    for (std::uint64_t seed = 1; seed <= 60 && spike_seed == 0; ++seed) {
        const TimeSeries s = series_of(random_walk(120, seed));
        std::vector<double> td, bu;
        for (std::size_t k = 1; k <= 25; ++k) {
            td.push_back(aggregate_signs(s, top_down(s, k)).total_error);
            bu.push_back(aggregate_signs(s, bottom_up(s, k)).total_error);
        }
        for (std::size_t i = 0; i + 1 < td.size() && spike_seed == 0; ++i) {
            if (td[i + 1] > td[i] + 1e-12) {
                spike_seed = seed;
                spike_algo = "topdown";
            } else if (bu[i + 1] > bu[i] + 1e-12) {
                spike_seed = seed;
                spike_algo = "bottomup";
            }
        }
        if (spike_seed != 0) {
            const PreprocessedSeries pre = dedup_consecutive(s);
            const SpectrumIndex index =
                build_spectrum_index(label_extrema(pre, find_extrema(pre)), pre);
            double prev = std::numeric_limits<double>::infinity();
            for (const auto& [k, omafe] : spectrum_curve(index, 25)) {
                if (omafe > prev) {
                    detail = "optimal curve increased on the spike instance";
                    return false;
                }
                prev = omafe;
            }
        }
    }
    if (spike_seed == 0) {
        detail = "no heuristic spike found in seeds 1..60";
        return false;
    }
    detail = "heuristic spike: " + spike_algo + " at walk seed " + std::to_string(spike_seed);
    return true;
}

bool dominance(std::string& detail) {
    long checked = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const TimeSeries s = series_of(random_walk(4000, seed));
        const PreprocessedSeries pre = dedup_consecutive(s);
        const SpectrumIndex index =
            build_spectrum_index(label_extrema(pre, find_extrema(pre)), pre);
        for (const std::size_t budget : {5UL, 10UL, 20UL, 40UL, 80UL}) {
            for (int which = 0; which < 2; ++which) {
                const LinearSegmentation lin =
                    which == 0 ? top_down(s, budget) : bottom_up(s, budget);
                const Segmentation heuristic = aggregate_signs(s, lin);
                const double optimal = query_spectrum(index, heuristic.segment_count()).omafe;
                ++checked;
                if (optimal > heuristic.total_error + 1e-9) {
                    std::ostringstream os;
                    os << (which == 0 ? "topdown" : "bottomup") << " seed " << seed << " budget "
                       << budget << ": optimal " << optimal << " > heuristic "
                       << heuristic.total_error;
                    detail = os.str();
                    return false;
                }
            }
        }
    }
    detail = std::to_string(checked) + " comparisons";
    return true;
}

bool linearity(std::string& detail) {
#if MONOSEG_HAVE_MALLOC_H && defined(__GLIBC__)
    // keep freed buffers in the arena so every rep after warm-up runs
    // fault-free; earlier criteria leave the allocator in a state that
    // otherwise skews the large-input reps
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
    volatile double sink = 0.0;

    const auto pipeline_seconds = [&](const TimeSeries& series) {
        const auto start = Clock::now();
        const PreprocessedSeries pre = dedup_consecutive(series);
        const auto labeled = label_extrema(pre, find_extrema(pre));
        const Segmentation seg = segment_optimal(labeled, 20, pre);
        sink = sink + seg.total_error;
        return seconds_since(start);
    };

    const TimeSeries small = series_of(random_walk(100000, 42));
    const TimeSeries large = series_of(random_walk(200000, 42));
    std::vector<double> small_times, large_times;
    pipeline_seconds(small);  // warm-up, both sizes
    pipeline_seconds(large);
    for (int rep = 0; rep < 5; ++rep) {
        small_times.push_back(pipeline_seconds(small));
        large_times.push_back(pipeline_seconds(large));
    }
    const double ratio = median(large_times) / median(small_times);

    const auto query_ns = [&](const SpectrumIndex& index) {
        const std::size_t batch = 4096;
        const std::size_t m = index.extremum_count();
        std::vector<double> reps;
        for (int rep = 0; rep < 100; ++rep) {
            const auto start = Clock::now();
            for (std::size_t q = 0; q < batch; ++q)
                sink = sink + query_spectrum(index, 1 + q % m).omafe;
            reps.push_back(seconds_since(start) / static_cast<double>(batch) * 1e9);
        }
        return median(reps);
    };

    const auto index_of = [](const TimeSeries& series) {
        const PreprocessedSeries pre = dedup_consecutive(series);
        return build_spectrum_index(label_extrema(pre, find_extrema(pre)), pre);
    };
    const SpectrumIndex small_index = index_of(series_of(random_walk(10000, 7)));
    const SpectrumIndex large_index = index_of(series_of(random_walk(1000000, 7)));
    const double small_ns = query_ns(small_index);
    const double large_ns = query_ns(large_index);
    const double query_ratio = large_ns / small_ns;

    std::ostringstream os;
    os << "pipeline 2e5/1e5 ratio " << ratio << " (<= 2.5), query ns " << small_ns << " -> "
       << large_ns << " ratio " << query_ratio << " (within 3x)";
    detail = os.str();
    (void)sink;
    return ratio <= 2.5 && query_ratio <= 3.0 && query_ratio >= 1.0 / 3.0;
}

bool envelope_identity(std::string& detail) {
    std::mt19937_64 rng(717171);
    long checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng() % 100;
        const auto values = rng_uniform(n, rng);
        double widest_down = 0, widest_up = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                widest_down = std::max(widest_down, values[i] - values[j]);
                widest_up = std::max(widest_up, values[j] - values[i]);
            }
        ++checked;
        if (best_monotone_fit(values, Direction::increasing).error != widest_down / 2.0 ||
            best_monotone_fit(values, Direction::decreasing).error != widest_up / 2.0) {
            detail = "mismatch at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = std::to_string(checked) + " sequences, both directions exact";
    return true;
}

bool regression_error_oracle(std::string& detail) {
    std::mt19937_64 rng(818181);
    std::uniform_real_distribution<double> value(-1e4, 1e4);
    std::uniform_real_distribution<double> step(0.1, 2.0);
    long checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 3 + rng() % 400;
        TimeSeries s;
        s.xs.resize(n);
        s.ys.resize(n);
        double x = 0;
        for (std::size_t i = 0; i < n; ++i) {
            x += step(rng);
            s.xs[i] = x;
            s.ys[i] = value(rng);
        }
        const RangeMoments m = build_moments(s);
        const std::size_t p = rng() % n;
        const std::size_t q = p + rng() % (n - p);

        const double count = static_cast<double>(q - p + 1);
        double direct = 0;
        if (count > 2) {
            double mean_x = 0, mean_y = 0;
            for (std::size_t i = p; i <= q; ++i) {
                mean_x += s.xs[i];
                mean_y += s.ys[i];
            }
            mean_x /= count;
            mean_y /= count;
            double sxx = 0, sxy = 0;
            for (std::size_t i = p; i <= q; ++i) {
                sxx += (s.xs[i] - mean_x) * (s.xs[i] - mean_x);
                sxy += (s.xs[i] - mean_x) * (s.ys[i] - mean_y);
            }
            const double slope = sxy / sxx;
            const double intercept = mean_y - slope * mean_x;
            for (std::size_t i = p; i <= q; ++i) {
                const double r = s.ys[i] - (intercept + slope * s.xs[i]);
                direct += r * r;
            }
        }
        ++checked;
        const double fast = regression_error(m, p, q);
        if (std::abs(fast - direct) > 1e-6 * std::max(1.0, direct)) {
            std::ostringstream os;
            os << "trial " << trial << ": " << fast << " vs " << direct;
            detail = os.str();
            return false;
        }
    }
    detail = std::to_string(checked) + " ranges within relative 1e-6";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {"worked_example_labels_1_3_2_4", worked_example_labels},
        {"worked_example_relabeling_0_10_9_10_0", worked_example_relabeling},
        {"label_oracle_equivalence", label_oracle_equivalence},
        {"oracle_optimality_small_instances", oracle_optimality},
        {"spectrum_identity", spectrum_identity},
        {"monotone_spectrum_and_heuristic_spike", monotone_spectrum},
        {"dominance_random_walks", dominance},
        {"linearity_host_relative", linearity},
        {"envelope_drawdown_identity", envelope_identity},
        {"regression_error_oracle", regression_error_oracle},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = Clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = criterion.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.name,
                    seconds_since(start), note.empty() ? "" : ": ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
