#pragma once

// Adversary search shared by the Ramsey and Paris-Harrington sweeps: a DFS
// over partition colorings of the complete n-graph on k vertices, assigning
// edges in lexicographic order and pruning as soon as a forbidden set shows
// up. Not part of the installed interface.

#include <cstdint>
#include <variant>
#include <vector>

#include "ramsey/color.hpp"

namespace ramsey::detail {

/// Forbidden: a set of q[c-1] vertices all of whose edges have color c.
struct SizeRule {
  std::vector<int> q;
};

/// Forbidden: a monochromatic H with |H| >= h and |H| >= min(H), where the
/// vertex with index i carries label i + 1.
struct LargeSetRule {
  int h;
};

using Rule = std::variant<SizeRule, LargeSetRule>;

struct AvoidanceOutcome {
  enum class Status { Found, NoneExists, Exhausted };
  Status status = Status::NoneExists;
  /// Color per edge, edges in lexicographic order (Found only).
  std::vector<Color> coloring;
  std::uint64_t nodes = 0;
};

/// Searches for a coloring of the n-subsets of {0..k-1} with r colors that
/// contains no forbidden set. The first edge is restricted to
/// `first_edge_colors` (color symmetry breaking). The DFS forest is cut at a
/// fixed depth into independent subtrees that `jobs` workers process; the
/// outcome, witness and node count equal those of the sequential DFS.
AvoidanceOutcome find_avoiding_coloring(int k, int n, int r, const Rule& rule, ColorSet first_edge_colors,
                                        std::uint64_t max_nodes, int jobs);

/// Edge list of the complete n-graph on {0..k-1}, lexicographic.
std::vector<std::vector<std::uint32_t>> lex_edges(int k, int n);

}  // namespace ramsey::detail
