#pragma once

// Brute-force reference implementations. Everything here works on bitmasks
// over at most 20 vertices and shares no code with the library's searches.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace oracle {

using ramsey::Color;
using ramsey::ColorSet;
using ramsey::Vertex;

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }

inline std::vector<Vertex> members(std::uint32_t mask, const std::vector<Vertex>& labels) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (mask & (1u << i)) out.push_back(labels[i]);
  }
  return out;
}

/// All masks over `k` bits with exactly `n` bits set, increasing.
inline std::vector<std::uint32_t> masks_of_size(int k, int n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << k); ++m) {
    if (popcount(m) == n) out.push_back(m);
  }
  return out;
}

/// Colors shared by every n-subset of the vertex mask W.
template <class ColorsOf>
ColorSet common(std::uint32_t W, int n, int k, ColorsOf&& colors_of) {
  ColorSet acc = ColorSet::all(ramsey::kMaxColors);
  for (std::uint32_t e : masks_of_size(k, n)) {
    if ((e & W) == e) acc &= colors_of(e);
  }
  return acc;
}

/// Any monochromatic h-subset of a coloring given by edge mask -> colors.
template <class ColorsOf>
bool has_mono(int k, int n, int h, ColorsOf&& colors_of) {
  for (std::uint32_t W : masks_of_size(k, h)) {
    if (!common(W, n, k, colors_of).empty()) return true;
  }
  return false;
}

/// Lexicographically least monochromatic h-subset and its least color.
inline std::optional<std::pair<std::vector<Vertex>, Color>> least_mono(const ramsey::ColoredGraph& g, int h) {
  const auto& labels = g.vertices();
  const int k = static_cast<int>(labels.size());
  const int n = g.arity();
  auto colors_of = [&](std::uint32_t e) { return g.source().colors_of(members(e, labels)); };
  std::vector<std::pair<std::vector<Vertex>, Color>> found;
  for (std::uint32_t W : masks_of_size(k, h)) {
    const auto c = common(W, n, k, colors_of);
    if (!c.empty()) found.emplace_back(members(W, labels), c.least());
  }
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end());
}

/// Calls fn(colors) for every partition coloring of the n-subsets of k
/// vertices with r colors; colors[i] belongs to masks_of_size(k, n)[i].
/// Stops early when fn returns false.
inline void for_each_coloring(int k, int n, int r, const std::function<bool(const std::vector<Color>&)>& fn) {
  const auto edges = masks_of_size(k, n);
  std::vector<Color> colors(edges.size(), 1);
  while (true) {
    if (!fn(colors)) return;
    std::size_t i = 0;
    while (i < colors.size() && colors[i] == static_cast<Color>(r)) colors[i++] = 1;
    if (i == colors.size()) return;
    ++colors[i];
  }
}

/// Colors of an edge mask under a partition coloring from for_each_coloring.
struct PartitionLookup {
  std::vector<int> index;  // edge mask -> position

  PartitionLookup(int k, int n) : index(1u << k, -1) {
    const auto edges = masks_of_size(k, n);
    for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  }
  ColorSet operator()(const std::vector<Color>& colors, std::uint32_t e) const {
    return ColorSet::single(colors[static_cast<std::size_t>(index[e])]);
  }
};

/// N(r, n, h) by enumerating every coloring of every k in turn.
inline int ramsey_number(int r, int n, int h, int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    if (k < h) continue;
    PartitionLookup lookup(k, n);
    bool all = true;
    for_each_coloring(k, n, r, [&](const std::vector<Color>& colors) {
      all = has_mono(k, n, h, [&](std::uint32_t e) { return lookup(colors, e); });
      return all;
    });
    if (all) return k;
  }
  return -1;
}

/// Some H within 1..k (bit i = label i + 1) with |H| >= h, |H| >= min(H),
/// monochromatic.
template <class ColorsOf>
bool has_large_homogeneous(int k, int n, int h, ColorsOf&& colors_of) {
  for (std::uint32_t H = 1; H < (1u << k); ++H) {
    const int size = popcount(H);
    const int least = __builtin_ctz(H) + 1;
    if (size < h || size < least || size < n) continue;
    if (!common(H, n, k, colors_of).empty()) return true;
  }
  return false;
}

/// P(r, n, h; k) by enumerating all colorings.
inline bool ph_holds(int r, int n, int h, int k) {
  PartitionLookup lookup(k, n);
  bool all = true;
  for_each_coloring(k, n, r, [&](const std::vector<Color>& colors) {
    all = has_large_homogeneous(k, n, h, [&](std::uint32_t e) { return lookup(colors, e); });
    return all;
  });
  return all;
}

/// Random table coloring on 0..k-1; with probability `overlap` an edge gets
/// a random nonempty color set instead of one color.
inline ramsey::ColoredGraph random_graph(std::mt19937_64& rng, int k, int n, int r, double overlap = 0.0,
                                         Vertex base = 0) {
  std::vector<Vertex> labels(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) labels[static_cast<std::size_t>(i)] = base + static_cast<Vertex>(i);
  std::uniform_int_distribution<int> pick(1, r);
  std::bernoulli_distribution multi(overlap);
  ramsey::ColorTable table;
  for (std::uint32_t e : masks_of_size(k, n)) {
    ColorSet cs = ColorSet::single(static_cast<Color>(pick(rng)));
    if (multi(rng)) {
      for (int c = 1; c <= r; ++c) {
        if (rng() & 1) cs.insert(static_cast<Color>(c));
      }
    }
    table[members(e, labels)] = cs;
  }
  return ramsey::make_graph(labels, n, r, ramsey::ColoringSource::table(std::move(table)));
}

}  // namespace oracle
