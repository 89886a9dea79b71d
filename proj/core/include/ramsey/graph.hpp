#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/subsets.hpp"

namespace ramsey {

/// An r-colored n-graph: a finite ordered vertex set whose n-element subsets
/// (the edges) are covered by r possibly overlapping colors.
///
/// Table entries that are not edges of this graph ("overflow") are kept in
/// the source but never consulted. Immutable once built.
class ColoredGraph {
 public:
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int arity() const { return arity_; }
  int color_count() const { return color_count_; }
  const ColoringSource& source() const { return source_; }

  std::uint64_t edge_count() const { return binomial(vertices_.size(), arity_); }
  bool has_vertex(Vertex v) const;

 private:
  friend ColoredGraph make_graph(std::vector<Vertex>, int, int, ColoringSource);
  friend ColoredGraph restrict_to(const ColoredGraph&, std::vector<Vertex>);

  std::vector<Vertex> vertices_;
  int arity_ = 1;
  int color_count_ = 1;
  ColoringSource source_ = ColoringSource::table({});
};

/// Validates and builds a graph. Vertices may come in any order; they are
/// stored sorted. Table sources are checked edge by edge for the covering
/// invariant; oracle sources must agree on r.
ColoredGraph make_graph(std::vector<Vertex> vertices, int n, int r, ColoringSource coloring);

/// Convenience: vertices 0..count-1.
ColoredGraph make_graph(std::size_t count, int n, int r, ColoringSource coloring);

/// All edges, lexicographic in the sorted member tuples.
SubsetRange edges_of(const ColoredGraph& graph);

/// The subgraph spanned by W: same arity, same colors, same source.
ColoredGraph restrict_to(const ColoredGraph& graph, std::vector<Vertex> W);

/// Color set of one edge. Throws UnknownEdge when `edge` is not an n-subset
/// of the vertex set.
ColorSet colors_of(const ColoredGraph& graph, std::span<const Vertex> edge);

/// Colors shared by every n-subset of W (W need not be sorted).
ColorSet common_colors(const ColoredGraph& graph, std::span<const Vertex> W);

/// Least color carried by every n-subset of W, if any.
std::optional<Color> is_monochromatic(const ColoredGraph& graph, std::span<const Vertex> W);

}  // namespace ramsey
