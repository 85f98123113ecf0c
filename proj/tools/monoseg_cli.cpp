// Command-line front end: CSV in, segmentations / scale labels / spectra /
// benchmarks out. See README.md for the output formats.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoseg/linear_heuristics.hpp"
#include "monoseg/random_walk.hpp"
#include "monoseg/scale_labeling.hpp"
#include "monoseg/segmentation.hpp"
#include "monoseg/series.hpp"
#include "monoseg/spectrum.hpp"

using json = nlohmann::ordered_json;
using namespace monoseg;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBadBudget = 3;

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

TimeSeries read_input(const std::string& path) {
    if (path == "-") return parse_csv(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_csv(in);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct SegmentationReport {
    Segmentation seg;
    std::optional<std::size_t> ranges_before_aggregation;
    bool degenerate = false;
};

void print_segmentation_csv(const SegmentationReport& report) {
    std::cout << "breakpoint\n";
    for (const std::size_t b : report.seg.breakpoints) std::cout << b << "\n";
    std::cout << "\nstart,end,direction,omafe\n";
    for (std::size_t k = 0; k < report.seg.segment_count(); ++k) {
        std::cout << report.seg.breakpoints[k] << "," << report.seg.breakpoints[k + 1] << ","
                  << to_string(report.seg.directions[k]) << ","
                  << format_double(report.seg.per_segment_error[k]) << "\n";
    }
    std::cout << "\ntotal_omafe\n" << format_double(report.seg.total_error) << "\n";
    if (report.ranges_before_aggregation) {
        std::cout << "\nranges_before_aggregation\n" << *report.ranges_before_aggregation << "\n";
    }
}

json segmentation_to_json(const SegmentationReport& report, const std::string& algo) {
    json out;
    out["command"] = "segment";
    out["algo"] = algo;
    if (report.degenerate) out["degenerate"] = true;
    out["breakpoints"] = report.seg.breakpoints;
    json segments = json::array();
    for (std::size_t k = 0; k < report.seg.segment_count(); ++k) {
        segments.push_back({{"start", report.seg.breakpoints[k]},
                            {"end", report.seg.breakpoints[k + 1]},
                            {"direction", to_string(report.seg.directions[k])},
                            {"omafe", report.seg.per_segment_error[k]}});
    }
    out["segments"] = std::move(segments);
    out["total_omafe"] = report.seg.total_error;
    if (report.ranges_before_aggregation)
        out["ranges_before_aggregation"] = *report.ranges_before_aggregation;
    return out;
}

int cmd_label(const std::string& input, const std::string& format) {
    const TimeSeries series = read_input(input);
    if (series.empty()) throw ParseError(0, "empty input");
    const PreprocessedSeries pre = dedup_consecutive(series);

    std::vector<LabeledExtremum> labeled;
    bool degenerate = false;
    if (pre.size() < 2) {
        degenerate = true;
        std::cerr << "warning: degenerate series (fewer than 2 distinct values)\n";
    } else {
        labeled = label_extrema(pre, find_extrema(pre));
    }

    if (format == "json") {
        json out;
        out["command"] = "label";
        if (degenerate) out["degenerate"] = true;
        json rows = json::array();
        for (const LabeledExtremum& e : labeled) {
            rows.push_back({{"index", pre.origin_index[e.pos]},
                            {"value", pre.values[e.pos]},
                            {"kind", to_string(e.kind)},
                            {"scale", e.scale}});
        }
        out["extrema"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "index,value,kind,scale\n";
        for (const LabeledExtremum& e : labeled) {
            std::cout << pre.origin_index[e.pos] << "," << format_double(pre.values[e.pos]) << ","
                      << to_string(e.kind) << "," << format_double(e.scale) << "\n";
        }
    }
    return 0;
}

SegmentationReport run_segmentation(const TimeSeries& series, const std::string& algo,
                                    std::size_t budget) {
    const PreprocessedSeries pre = dedup_consecutive(series);
    SegmentationReport report;
    if (pre.size() < 2) {
        std::cerr << "warning: degenerate series (fewer than 2 distinct values)\n";
        report.seg = trivial_segmentation(pre);
        report.degenerate = true;
        return report;
    }
    if (algo == "optimal") {
        const auto labeled = label_extrema(pre, find_extrema(pre));
        report.seg = segment_optimal(labeled, budget, pre);
    } else {
        const LinearSegmentation lin =
            algo == "topdown" ? top_down(series, budget) : bottom_up(series, budget);
        report.ranges_before_aggregation = lin.ranges.size();
        report.seg = aggregate_signs(series, lin);
    }
    return report;
}

int cmd_segment(const std::string& input, std::size_t budget, const std::string& algo,
                const std::string& format) {
    const TimeSeries series = read_input(input);
    if (series.empty()) throw ParseError(0, "empty input");
    if (algo == "bottomup" && budget > series.size()) {
        std::cerr << "error: --k exceeds the series length (bottom-up needs k <= n)\n";
        return kExitBadBudget;
    }

    const SegmentationReport report = run_segmentation(series, algo, budget);
    if (format == "json")
        std::cout << segmentation_to_json(report, algo).dump(2) << "\n";
    else
        print_segmentation_csv(report);
    return 0;
}

int cmd_spectrum(const std::string& input, std::size_t max_k, const std::string& algo,
                 const std::string& format) {
    const TimeSeries series = read_input(input);
    if (series.empty()) throw ParseError(0, "empty input");
    const PreprocessedSeries pre = dedup_consecutive(series);

    std::vector<std::pair<std::size_t, double>> points;
    if (pre.size() < 2) {
        std::cerr << "warning: degenerate series (fewer than 2 distinct values)\n";
        for (std::size_t k = 1; k <= max_k; ++k) points.emplace_back(k, 0.0);
    } else if (algo == "optimal") {
        // one O(n log n) build, then constant-time queries
        const auto labeled = label_extrema(pre, find_extrema(pre));
        const SpectrumIndex index = build_spectrum_index(labeled, pre);
        points = spectrum_curve(index, max_k);
    } else {
        for (std::size_t k = 1; k <= max_k; ++k) {
            const std::size_t budget = algo == "bottomup" ? std::min(k, series.size()) : k;
            const LinearSegmentation lin =
                algo == "topdown" ? top_down(series, budget) : bottom_up(series, budget);
            points.emplace_back(k, aggregate_signs(series, lin).total_error);
        }
    }

    if (format == "json") {
        json out;
        out["command"] = "spectrum";
        out["algo"] = algo;
        json rows = json::array();
        for (const auto& [k, omafe] : points) rows.push_back({{"k", k}, {"omafe", omafe}});
        out["points"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "k,omafe\n";
        for (const auto& [k, omafe] : points)
            std::cout << k << "," << format_double(omafe) << "\n";
    }
    return 0;
}

int cmd_generate(const std::string& kind, std::size_t n, std::uint64_t seed,
                 const std::string& format) {
    (void)kind;  // only random-walk is known; CLI11 validates
    const std::vector<double> ys = random_walk(n, seed);
    if (format == "json") {
        json out;
        out["command"] = "generate";
        out["kind"] = "random-walk";
        out["n"] = n;
        out["seed"] = seed;
        out["ys"] = ys;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const double y : ys) std::cout << format_double(y) << "\n";
    }
    return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t budget, std::uint64_t seed,
              std::size_t bottomup_ceiling, const std::string& format) {
    struct Row {
        std::size_t n;
        double optimal_s, topdown_s, index_build_s, query_ns;
        std::optional<double> bottomup_s;
    };
    std::vector<Row> rows;
    volatile double sink = 0.0;

    for (const std::size_t n : sizes) {
        TimeSeries series;
        series.ys = random_walk(n, seed);
        series.xs.resize(n);
        for (std::size_t i = 0; i < n; ++i) series.xs[i] = static_cast<double>(i);

        Row row{};
        row.n = n;

        auto start = std::chrono::steady_clock::now();
        const PreprocessedSeries pre = dedup_consecutive(series);
        const auto extrema = find_extrema(pre);
        const auto labeled = label_extrema(pre, extrema);
        const Segmentation seg = segment_optimal(labeled, budget, pre);
        row.optimal_s = seconds_since(start);
        sink = sink + seg.total_error;

        start = std::chrono::steady_clock::now();
        const Segmentation td = aggregate_signs(series, top_down(series, budget));
        row.topdown_s = seconds_since(start);
        sink = sink + td.total_error;

        if (n <= bottomup_ceiling) {
            start = std::chrono::steady_clock::now();
            const Segmentation bu = aggregate_signs(series, bottom_up(series, std::min(budget, n)));
            row.bottomup_s = seconds_since(start);
            sink = sink + bu.total_error;
        } else {
            std::cerr << "note: bottom-up skipped for n=" << n << " (ceiling "
                      << bottomup_ceiling << ")\n";
        }

        start = std::chrono::steady_clock::now();
        const SpectrumIndex index = build_spectrum_index(labeled, pre);
        row.index_build_s = seconds_since(start);

        const std::size_t m = index.extremum_count();
        const std::size_t queries = 100000;
        start = std::chrono::steady_clock::now();
        for (std::size_t q = 0; q < queries; ++q)
            sink = sink + query_spectrum(index, 1 + q % m).omafe;
        row.query_ns = seconds_since(start) / static_cast<double>(queries) * 1e9;

        rows.push_back(row);
    }
    (void)sink;

    if (format == "json") {
        json out;
        out["command"] = "bench";
        out["k"] = budget;
        out["seed"] = seed;
        json jrows = json::array();
        for (const Row& r : rows) {
            json jr;
            jr["n"] = r.n;
            jr["optimal_s"] = r.optimal_s;
            jr["topdown_s"] = r.topdown_s;
            jr["bottomup_s"] = r.bottomup_s ? json(*r.bottomup_s) : json(nullptr);
            jr["index_build_s"] = r.index_build_s;
            jr["query_ns"] = r.query_ns;
            jrows.push_back(std::move(jr));
        }
        out["rows"] = std::move(jrows);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n,optimal_s,topdown_s,bottomup_s,index_build_s,query_ns\n";
        for (const Row& r : rows) {
            std::cout << r.n << "," << format_double(r.optimal_s) << ","
                      << format_double(r.topdown_s) << ","
                      << (r.bottomup_s ? format_double(*r.bottomup_s) : std::string{}) << ","
                      << format_double(r.index_build_s) << "," << format_double(r.query_ns)
                      << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-monotonic segmentation of numeric sequences"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "csv";
    std::string algo = "optimal";
    std::string kind = "random-walk";
    std::size_t budget = 0;
    std::size_t bench_budget = 20;
    std::size_t max_k = 0;
    std::size_t n = 0;
    std::uint64_t seed = 42;
    std::size_t bottomup_ceiling = 20000;
    std::vector<std::size_t> sizes;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    const auto add_algo = [&](CLI::App* cmd) {
        cmd->add_option("--algo", algo, "Segmentation algorithm")
            ->check(CLI::IsMember({"optimal", "topdown", "bottomup"}));
    };

    CLI::App* label = app.add_subcommand("label", "Scale-label every extremum");
    label->add_option("input", input, "CSV path, or - for stdin");
    add_format(label);

    CLI::App* segment = app.add_subcommand("segment", "Segment into at most k pieces");
    segment->add_option("input", input, "CSV path, or - for stdin");
    segment->add_option("--k", budget, "Segment budget (>= 1)");
    add_algo(segment);
    add_format(segment);

    CLI::App* spectrum = app.add_subcommand("spectrum", "Error versus segment budget");
    spectrum->add_option("input", input, "CSV path, or - for stdin");
    spectrum->add_option("--max-k", max_k, "Largest budget to report (>= 1)");
    add_algo(spectrum);
    add_format(spectrum);

    CLI::App* generate = app.add_subcommand("generate", "Emit synthetic data as CSV");
    generate->add_option("--kind", kind, "Data kind")->check(CLI::IsMember({"random-walk"}));
    generate->add_option("--n", n, "Number of samples (>= 1)");
    generate->add_option("--seed", seed, "Generator seed");
    add_format(generate);

    CLI::App* bench = app.add_subcommand("bench", "Time the segmenters on random walks");
    bench->add_option("--sizes", sizes, "Comma-separated series lengths")
        ->required()
        ->delimiter(',');
    bench->add_option("--k", bench_budget, "Segment budget");
    bench->add_option("--seed", seed, "Generator seed");
    bench->add_option("--bottomup-ceiling", bottomup_ceiling,
                      "Skip bottom-up above this length");
    add_format(bench);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(label)) return cmd_label(input, format);
        if (app.got_subcommand(segment)) {
            if (budget < 1) {
                std::cerr << "error: --k must be at least 1\n";
                return kExitBadBudget;
            }
            return cmd_segment(input, budget, algo, format);
        }
        if (app.got_subcommand(spectrum)) {
            if (max_k < 1) {
                std::cerr << "error: --max-k must be at least 1\n";
                return kExitBadBudget;
            }
            return cmd_spectrum(input, max_k, algo, format);
        }
        if (app.got_subcommand(generate)) {
            if (n < 1) {
                std::cerr << "error: --n must be at least 1\n";
                return kExitBadBudget;
            }
            return cmd_generate(kind, n, seed, format);
        }
        if (app.got_subcommand(bench)) {
            if (bench_budget < 1) {
                std::cerr << "error: --k must be at least 1\n";
                return kExitBadBudget;
            }
            return cmd_bench(sizes, bench_budget, seed, bottomup_ceiling, format);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
