#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

// Coloring-spec text format.
//
//   ncolor n=<n> r=<r> v=<count> [base=<b>]
//   table
//   <v1> <v2> ... <vn> <c1>[,<c2>...]
//   ...
//
// or, in place of the table,
//
//   oracle seed=<u64>
//
// Vertices are base..base+count-1 (base defaults to 0). Blank lines and
// lines starting with '#' are ignored.

ColoredGraph parse_ncolor(std::istream& in);
ColoredGraph parse_ncolor(std::string_view text);
ColoredGraph load_ncolor(const std::string& path);

/// Oracle graphs serialize as an oracle line; everything else is written as
/// an explicit table in lexicographic edge order. The vertex set must be a
/// contiguous label range.
std::string to_ncolor(const ColoredGraph& graph);

}  // namespace ramsey
