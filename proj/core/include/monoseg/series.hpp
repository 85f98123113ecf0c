#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoseg {

/// Ordered (x, y) samples with strictly increasing x.
struct TimeSeries {
    std::vector<double> xs;
    std::vector<double> ys;

    std::size_t size() const noexcept { return ys.size(); }
    bool empty() const noexcept { return ys.empty(); }
};

/// A series with every run of equal consecutive values collapsed to its
/// first sample. origin_index maps each kept position back to the source
/// series; source_size is the length of the source series.
struct PreprocessedSeries {
    std::vector<double> values;
    std::vector<std::size_t> origin_index;
    std::size_t source_size = 0;

    std::size_t size() const noexcept { return values.size(); }

    /// Deduplicated position whose run contains the given source index.
    std::size_t position_of_origin(std::size_t source_idx) const;
};

enum class ExtremumKind { minimum, maximum };

const char* to_string(ExtremumKind kind) noexcept;

/// Local extremum of a PreprocessedSeries. Consecutive extrema alternate
/// kind, and both series endpoints are extrema whenever the series has at
/// least two samples.
struct Extremum {
    std::size_t pos;
    ExtremumKind kind;
};

/// Input error with the offending 1-based row number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t row, const std::string& message);
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Raised when an operation needs at least two distinct values and the
/// (deduplicated) series has fewer. Callers treat the series as one
/// trivial segment.
class DegenerateSeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses CSV rows of the form "y" or "x,y". An optional first header row
/// is detected by a non-numeric first field. Single-column input is
/// indexed by position (xs = 0, 1, 2, ...). Newlines may be LF or CRLF.
/// Throws ParseError on malformed numbers, non-finite values,
/// inconsistent column counts, or non-increasing x.
TimeSeries parse_csv(std::istream& in);
TimeSeries parse_csv(const std::string& text);

/// Keeps the first sample of each run of equal consecutive y values.
PreprocessedSeries dedup_consecutive(const TimeSeries& series);

/// All strict local extrema in position order, endpoints included.
/// Throws DegenerateSeriesError when the series has fewer than 2 samples.
std::vector<Extremum> find_extrema(const PreprocessedSeries& series);

}  // namespace monoseg
