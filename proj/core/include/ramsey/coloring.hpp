#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ramsey/color.hpp"
#include "ramsey/subsets.hpp"

namespace ramsey {

using Edge = std::vector<Vertex>;
using ColorTable = std::map<Edge, ColorSet>;
using ColorFunction = std::function<ColorSet(std::span<const Vertex>)>;

/// Where the colors of a graph's edges come from. Immutable and cheap to copy
/// (the payload is shared), so it can be handed to concurrent workers.
///
///   Table    - explicit edge -> non-empty color set map; overlaps allowed.
///   Oracle   - color = 1 + (mix64(seed ^ fold(edge)) mod r), one color per edge.
///   Function - any pure callable; used for structured and derived colorings.
class ColoringSource {
 public:
  enum class Kind { Table, Oracle, Function };

  /// Keys are normalized to sorted order; a key with repeated labels is kept
  /// as-is so that graph validation can reject it.
  static ColoringSource table(ColorTable entries);
  static ColoringSource oracle(std::uint64_t seed, int r);
  static ColoringSource function(int r, ColorFunction fn, std::string name = "function");

  Kind kind() const { return kind_; }
  /// Number of colors the source can emit (0 for tables: bounded by the graph).
  int colors() const { return r_; }
  std::uint64_t seed() const { return seed_; }
  const std::string& name() const { return name_; }
  const ColorTable& entries() const;

  /// Colors of one edge given as strictly increasing labels. Empty when a
  /// table has no entry for it.
  ColorSet colors_of(std::span<const Vertex> edge) const;

 private:
  ColoringSource() = default;

  Kind kind_ = Kind::Table;
  int r_ = 0;
  std::uint64_t seed_ = 0;
  std::string name_;
  std::shared_ptr<const ColorTable> table_;
  std::shared_ptr<const ColorFunction> fn_;
};

}  // namespace ramsey
