#include "monoseg/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string_view>

namespace monoseg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool parse_number(std::string_view field, double& out) {
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

}  // namespace

const char* to_string(ExtremumKind kind) noexcept {
    return kind == ExtremumKind::minimum ? "min" : "max";
}

ParseError::ParseError(std::size_t row, const std::string& message)
    : std::runtime_error("row " + std::to_string(row) + ": " + message), row_(row) {}

std::size_t PreprocessedSeries::position_of_origin(std::size_t source_idx) const {
    auto it = std::upper_bound(origin_index.begin(), origin_index.end(), source_idx);
    if (it == origin_index.begin()) throw std::out_of_range("source index before first sample");
    return static_cast<std::size_t>(std::distance(origin_index.begin(), it)) - 1;
}

TimeSeries parse_csv(std::istream& in) {
    TimeSeries out;
    std::string line;
    std::size_t row = 0;
    int columns = 0;  // 0 until the first data row fixes it
    bool saw_content = false;

    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string_view view = trim(line);
        if (view.empty()) continue;

        const auto fields = split_fields(view);
        if (!saw_content) {
            saw_content = true;
            double probe;
            if (!parse_number(fields[0], probe)) continue;  // header row
        }

        if (fields.size() > 2) throw ParseError(row, "expected 1 or 2 columns, got " + std::to_string(fields.size()));
        if (columns == 0) {
            columns = static_cast<int>(fields.size());
        } else if (static_cast<int>(fields.size()) != columns) {
            throw ParseError(row, "inconsistent column count");
        }

        double x, y;
        if (columns == 2) {
            if (!parse_number(fields[0], x)) throw ParseError(row, "malformed numeric field '" + std::string(fields[0]) + "'");
            if (!parse_number(fields[1], y)) throw ParseError(row, "malformed numeric field '" + std::string(fields[1]) + "'");
        } else {
            if (!parse_number(fields[0], y)) throw ParseError(row, "malformed numeric field '" + std::string(fields[0]) + "'");
            x = static_cast<double>(out.xs.size());
        }
        if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError(row, "non-finite value");
        if (!out.xs.empty() && x <= out.xs.back()) throw ParseError(row, "non-increasing x");

        out.xs.push_back(x);
        out.ys.push_back(y);
    }
    return out;
}

TimeSeries parse_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_csv(in);
}

PreprocessedSeries dedup_consecutive(const TimeSeries& series) {
    PreprocessedSeries out;
    out.source_size = series.size();
    out.values.reserve(series.size());
    out.origin_index.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (out.values.empty() || series.ys[i] != out.values.back()) {
            out.values.push_back(series.ys[i]);
            out.origin_index.push_back(i);
        }
    }
    return out;
}

std::vector<Extremum> find_extrema(const PreprocessedSeries& series) {
    const auto& v = series.values;
    const std::size_t m = v.size();
    if (m < 2) throw DegenerateSeriesError("degenerate series: fewer than 2 distinct values");

    std::vector<Extremum> out;
    for (std::size_t p = 0; p < m; ++p) {
        const bool above_left = p == 0 || v[p] > v[p - 1];
        const bool above_right = p == m - 1 || v[p] > v[p + 1];
        if (above_left && above_right) {
            out.push_back({p, ExtremumKind::maximum});
            continue;
        }
        const bool below_left = p == 0 || v[p] < v[p - 1];
        const bool below_right = p == m - 1 || v[p] < v[p + 1];
        if (below_left && below_right) out.push_back({p, ExtremumKind::minimum});
    }
    return out;
}

}  // namespace monoseg
