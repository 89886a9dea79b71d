#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

/// The finite prefix of the vertex stream: labels first, first+1, ...,
/// first+count-1.
struct VertexStream {
  Vertex first = 0;
  std::size_t count = 0;

  std::vector<Vertex> labels() const;
};

/// Record of the outermost induction step.
///
/// For n >= 2: pivots[k] is v_k, set_sizes[k] is |V_k|, colors[k] is c(k),
/// and class_counts[j-1] counts the k with c(k) = j. For n = 1 only
/// class_counts is filled (sizes of the color classes of the stream).
struct ExtractTrace {
  std::vector<Vertex> pivots;
  std::vector<std::size_t> set_sizes;
  std::vector<Color> colors;
  std::vector<std::size_t> class_counts;
  Color final_color = 0;
  std::uint64_t evaluations = 0;
};

struct ExtractResult {
  /// Monochromatic t-set and its color, when the prefix was large enough.
  std::optional<std::vector<Vertex>> W;
  Color color = 0;
  ExtractTrace trace;
  /// Why W is missing.
  std::string failure;
  /// The failure was the evaluation cap, not the stream length.
  bool out_of_evaluations = false;
};

/// Greedy extraction of a monochromatic t-set from an r-colored n-graph on
/// the stream, following the induction on n:
///
///   n = 1:  keep the largest color class (ties: least color).
///   n + 1:  take the least vertex v_k of the pool, color each n-subset A of
///           the rest by the least color of {v_k} + A, extract a homogeneous
///           pool V_k for that link coloring (recursively, arity n), record
///           its color c(k), continue inside V_k. Finally keep the pivots
///           of the most frequent c(k).
///
/// `max_evaluations` caps coloring queries across all recursion levels.
/// Running out of stream or evaluations is a reported failure, never a
/// wrong answer.
ExtractResult extract_mono(const ColoringSource& coloring, int n, int r, std::size_t t, const VertexStream& stream,
                           std::uint64_t max_evaluations = 100'000'000);

/// Exhaustive check that every n-subset of W carries `color`.
bool verify_extraction(std::span<const Vertex> W, Color color, const ColoringSource& coloring, int n);

}  // namespace ramsey
