#include "ramsey/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {
namespace {

std::string edge_text(std::span<const Vertex> edge) {
  std::string s = "(";
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(edge[i]);
  }
  return s + ")";
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> labels, const char* what) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw Error(ErrorCode::DuplicateElements, std::string(what) + " has a repeated label");
  }
  return labels;
}

void check_table(const std::vector<Vertex>& vertices, int n, int r, const ColoringSource& src) {
  for (const auto& [edge, colors] : src.entries()) {
    if (edge.size() != static_cast<std::size_t>(n) ||
        std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw Error(ErrorCode::ArityMismatch,
                  "table entry " + edge_text(edge) + " is not a " + std::to_string(n) + "-subset");
    }
    if (colors.empty() || colors.greatest() > static_cast<Color>(r)) {
      throw Error(ErrorCode::ColorOutOfRange, "table entry " + edge_text(edge) + " has a color outside 1.." +
                                                  std::to_string(r));
    }
  }
  for (const auto& edge : SubsetRange(vertices, n)) {
    if (src.colors_of(edge).empty()) {
      throw Error(ErrorCode::CoveringViolation, "edge " + edge_text(edge) + " has no color");
    }
  }
}

}  // namespace

bool ColoredGraph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

ColoredGraph make_graph(std::vector<Vertex> vertices, int n, int r, ColoringSource coloring) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "arity must be at least 1");
  if (r < 1 || r > kMaxColors) throw Error(ErrorCode::InvalidArgument, "color count must be in 1..32");
  vertices = sorted_unique(std::move(vertices), "vertex set");
  switch (coloring.kind()) {
    case ColoringSource::Kind::Table:
      check_table(vertices, n, r, coloring);
      break;
    case ColoringSource::Kind::Oracle:
    case ColoringSource::Kind::Function:
      if (coloring.colors() != r) {
        throw Error(ErrorCode::InvalidArgument, "coloring emits " + std::to_string(coloring.colors()) +
                                                    " colors but the graph declares " + std::to_string(r));
      }
      break;
  }
  ColoredGraph g;
  g.vertices_ = std::move(vertices);
  g.arity_ = n;
  g.color_count_ = r;
  g.source_ = std::move(coloring);
  return g;
}

ColoredGraph make_graph(std::size_t count, int n, int r, ColoringSource coloring) {
  std::vector<Vertex> vertices(count);
  std::iota(vertices.begin(), vertices.end(), Vertex{0});
  return make_graph(std::move(vertices), n, r, std::move(coloring));
}

SubsetRange edges_of(const ColoredGraph& graph) {
  return SubsetRange(graph.vertices(), static_cast<std::size_t>(graph.arity()));
}

ColoredGraph restrict_to(const ColoredGraph& graph, std::vector<Vertex> W) {
  W = sorted_unique(std::move(W), "restriction set");
  for (Vertex v : W) {
    if (!graph.has_vertex(v)) {
      throw Error(ErrorCode::NotASubset, "vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  ColoredGraph sub = graph;
  sub.vertices_ = std::move(W);
  return sub;
}

ColorSet colors_of(const ColoredGraph& graph, std::span<const Vertex> edge) {
  const bool sorted_distinct = std::adjacent_find(edge.begin(), edge.end(), std::greater_equal<>{}) == edge.end();
  if (edge.size() != static_cast<std::size_t>(graph.arity()) || !sorted_distinct ||
      !std::all_of(edge.begin(), edge.end(), [&](Vertex v) { return graph.has_vertex(v); })) {
    throw Error(ErrorCode::UnknownEdge, edge_text(edge) + " is not an edge of the graph");
  }
  ColorSet colors = graph.source().colors_of(edge) & ColorSet::all(graph.color_count());
  if (colors.empty()) throw Error(ErrorCode::CoveringViolation, "edge " + edge_text(edge) + " has no color");
  return colors;
}

ColorSet common_colors(const ColoredGraph& graph, std::span<const Vertex> W) {
  std::vector<Vertex> members(W.begin(), W.end());
  members = sorted_unique(std::move(members), "vertex subset");
  for (Vertex v : members) {
    if (!graph.has_vertex(v)) {
      throw Error(ErrorCode::NotASubset, "vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  if (members.size() < static_cast<std::size_t>(graph.arity())) {
    throw Error(ErrorCode::TooSmall, "subset has fewer than n vertices");
  }
  ColorSet common = ColorSet::all(graph.color_count());
  for (const auto& edge : SubsetRange(members, graph.arity())) {
    common &= colors_of(graph, edge);
    if (common.empty()) break;
  }
  return common;
}

std::optional<Color> is_monochromatic(const ColoredGraph& graph, std::span<const Vertex> W) {
  const ColorSet common = common_colors(graph, W);
  if (common.empty()) return std::nullopt;
  return common.least();
}

}  // namespace ramsey
