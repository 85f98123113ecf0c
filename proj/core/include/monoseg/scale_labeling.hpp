#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "monoseg/series.hpp"

namespace monoseg {

/// Extremum with its scale: the largest swing it terminates that is not
/// swallowed by a same-direction swing of larger amplitude.
struct LabeledExtremum {
    std::size_t pos;
    ExtremumKind kind;
    double scale;
};

/// Labels every extremum with its scale in one linear pass.
///
/// A stack of unresolved extrema is maintained with minima values strictly
/// increasing and maxima values strictly decreasing from bottom to top; the
/// two bottom entries are always the running global maximum and minimum.
/// Each new extremum that reaches past the second-from-top value resolves
/// the top two entries as a matched pair and labels them with their gap;
/// when only two entries remain, a new global extreme labels and evicts the
/// bottom one. Equal values count as reaching past, which demotes the
/// earlier of two equal same-sense extrema to the largest opposite-sense
/// scale between them. The final drain labels the leftover nested swings
/// and then the global pair.
///
/// Output is in position order. Throws DegenerateSeriesError for fewer
/// than two extrema.
std::vector<LabeledExtremum> label_extrema(const PreprocessedSeries& series,
                                           std::span<const Extremum> extrema);

/// Hook called with the stack contents (indices into `extrema`, bottom to
/// top) after every push; lets tests observe the stack discipline and count
/// operations.
using StackTrace = std::function<void(std::span<const std::size_t>)>;

std::vector<LabeledExtremum> label_extrema_traced(const PreprocessedSeries& series,
                                                  std::span<const Extremum> extrema,
                                                  const StackTrace& after_push);

}  // namespace monoseg
