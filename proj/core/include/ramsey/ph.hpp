#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/budget.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// The strengthened finite Ramsey property P(r, n, h; k): every r-coloring of
// the n-subsets of {1, ..., k} has a monochromatic H with |H| >= h and
// |H| >= min(H). Vertex labels in this module are 1-based, so min(H) is the
// actual smallest label.

struct PHWitness {
  std::vector<Vertex> H;
  Color color = 0;

  bool operator==(const PHWitness&) const = default;
};

enum class PHStatus { Holds, Fails, Unknown };

struct PHVerdict {
  int r = 0, n = 0, h = 0, k = 0;
  PHStatus status = PHStatus::Unknown;
  /// Coloring on labels 1..k with no witness (Fails only).
  std::optional<ColoredGraph> counterexample;
  std::uint64_t nodes = 0;
};

/// Witness with least min(H), then lexicographically least H, or nothing.
/// The graph's vertices must be exactly 1..k. Throws BudgetExhausted past
/// budget.max_subsets search nodes.
std::optional<PHWitness> check_coloring_ph(const ColoredGraph& graph, int h, const Budget& budget = {});

/// Independent re-check of a witness: monochromatic, |H| >= h, |H| >= min(H).
bool is_ph_witness(const ColoredGraph& graph, const PHWitness& witness, int h);

/// Decides P(r, n, h; k) by adversary search over partition colorings.
PHVerdict holds_p(int r, int n, int h, int k, const Budget& budget = {}, int jobs = 1);

struct PHNumberResult {
  std::optional<int> value;
  /// value >= lower_bound; every k below it failed.
  int lower_bound = 1;
  /// One verdict per k examined, ascending.
  std::vector<PHVerdict> verdicts;
  std::uint64_t nodes = 0;
};

/// Least k with P(r, n, h; k), by linear ascent from k = 1.
PHNumberResult ph_number(int r, int n, int h, const Budget& budget = {}, int jobs = 1);

/// Parameters beyond (r, n, h) = (2, 2, 3) are expected to exhaust any budget.
bool ph_parameters_large(int r, int n, int h);

const char* to_string(PHStatus status);

}  // namespace ramsey
