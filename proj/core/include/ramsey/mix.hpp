#pragma once

#include <cstdint>
#include <span>

namespace ramsey {

/// SplitMix64 step: add the golden-ratio increment, then the two
/// xor-shift-multiply rounds and the final xor-shift.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Hash of an edge: h = 0, then h = mix64(h ^ label) for each member label in
/// ascending order. Part of the coloring-spec oracle contract; do not change.
constexpr std::uint64_t fold_labels(std::span<const std::uint64_t> sorted_labels) {
  std::uint64_t h = 0;
  for (std::uint64_t v : sorted_labels) h = mix64(h ^ v);
  return h;
}

/// Oracle color in 1..r for an already folded edge hash.
constexpr std::uint32_t oracle_color(std::uint64_t seed, std::uint64_t edge_hash, std::uint32_t r) {
  return 1 + static_cast<std::uint32_t>(mix64(seed ^ edge_hash) % r);
}

}  // namespace ramsey
