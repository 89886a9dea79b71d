#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/budget.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct MonoWitness {
  std::vector<Vertex> W;
  Color color = 0;

  bool operator==(const MonoWitness&) const = default;
};

/// Lexicographically least h-subset of the graph that is monochromatic (then
/// least color), or nothing. Exhaustive; throws BudgetExhausted once more
/// than budget.max_subsets search nodes are spent.
std::optional<MonoWitness> find_mono(const ColoredGraph& graph, int h, const Budget& budget = {});

/// Outcome of an exact Ramsey-number sweep.
///
/// The sweep walks k upward from min(q). At each k it looks for a partition
/// coloring of P_n({0..k-1}) with no color-i monochromatic set of size q_i.
/// The first k where none exists is the value; the coloring found at k - 1
/// is the extremal witness.
struct RamseyResult {
  int r = 0;
  int n = 0;
  std::vector<int> q;                 // forbidden sizes per color
  std::optional<std::uint64_t> value; // set unless exhausted
  std::uint64_t lower_bound = 0;      // value >= lower_bound always
  bool exhausted = false;
  ColoredGraph witness;               // avoiding coloring on lower_bound - 1 vertices
  std::uint64_t nodes = 0;
};

/// N(r, n, h): least k such that every r-colored n-graph on k vertices has a
/// monochromatic h-set. `jobs` only changes wall time, never the result.
RamseyResult ramsey_number(int r, int n, int h, const Budget& budget = {}, int jobs = 1);

/// f(n; q_1..q_r): least k forcing, for some i, a color-i monochromatic set
/// of size q_i.
RamseyResult asymmetric_number(int n, std::span<const int> q, const Budget& budget = {}, int jobs = 1);

/// N(r, 1, h) = r(h - 1) + 1, by formula.
std::uint64_t pigeonhole_number(std::uint64_t r, std::uint64_t h);

/// True iff the graph has no color-i monochromatic set of size q[i-1] for
/// any i. Plain enumeration of subsets, sharing nothing with the sweep.
bool verify_avoidance(const ColoredGraph& graph, std::span<const int> q);
bool verify_avoidance(const ColoredGraph& graph, int h);

/// Table coloring on 0..k-1 from per-edge colors in lexicographic order.
ColoredGraph coloring_from_lex(int k, int n, int r, std::span<const Color> lex_colors, Vertex base = 0);

}  // namespace ramsey
