#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ramsey {

/// Caps for every budgeted operation. Running out is reported as exhaustion,
/// never as a negative answer.
struct Budget {
  /// Color assignments tried by an adversary (avoidance) sweep, summed over
  /// all vertex counts the sweep visits.
  std::uint64_t max_colorings = 10'000'000;
  /// Subsets examined by exhaustive subset searches; also the oracle
  /// evaluation pool for extraction.
  std::uint64_t max_subsets = 100'000'000;
  /// Largest vertex count an ascending sweep may reach.
  std::uint64_t max_depth = 64;

  static Budget tiny() { return {64, 10'000, 16}; }
  static Budget defaults() { return {}; }
  static Budget large() { return {1'000'000'000, 10'000'000'000, 256}; }

  /// "tiny", "default" or "large".
  static std::optional<Budget> preset(std::string_view name) {
    if (name == "tiny") return tiny();
    if (name == "default") return defaults();
    if (name == "large") return large();
    return std::nullopt;
  }
};

}  // namespace ramsey
