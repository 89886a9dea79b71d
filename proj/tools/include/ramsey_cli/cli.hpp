#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitExhausted = 2;

/// Runs one command. `args` excludes the program name. Writes exactly one
/// JSON document to `out` (except for --help) and diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Colorings of n-subsets of labels used by the extract command:
///   oracle        seeded mix oracle with r colors
///   planted-even  color 1 iff every member is even, else 2 (r = 2)
///   single        every edge has color 1
/// Throws InvalidArgument for an unknown name or a mismatched r.
ColoringSource extraction_family(const std::string& family, std::uint64_t seed, int r);

}  // namespace ramsey::cli
