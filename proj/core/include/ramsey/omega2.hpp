#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/budget.hpp"
#include "ramsey/graph.hpp"

namespace ramsey::omega2 {

/// A vertex (a, b) of N x N. The defaulted ordering is lexicographic.
struct GridVertex {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  auto operator<=>(const GridVertex&) const = default;
};

enum class PairColor { Red, Blue };

/// Red/blue coloring of unordered pairs of distinct grid vertices.
class PairColoring {
 public:
  using Fn = std::function<PairColor(const GridVertex& lo, const GridVertex& hi)>;

  /// 1 + (mix64(seed ^ fold(enc(lo), enc(hi))) mod 2), enc(v) = (a << 32) | b;
  /// 1 is red. Coordinates must fit in 32 bits.
  static PairColoring oracle(std::uint64_t seed);
  static PairColoring all_red();
  static PairColoring all_blue();
  /// Red iff b < a', reading the pair in lexicographic order as
  /// ((a, b), (a', b')).
  static PairColoring separated();
  static PairColoring custom(std::string family, Fn fn);

  /// Family name ("oracle", "all-red", "all-blue", "separated", ...).
  const std::string& family() const { return family_; }
  std::uint64_t seed() const { return seed_; }

  /// Color of {u, v}; u != v.
  PairColor color(const GridVertex& u, const GridVertex& v) const;
  bool red(const GridVertex& u, const GridVertex& v) const { return color(u, v) == PairColor::Red; }

 private:
  std::string family_;
  std::uint64_t seed_ = 0;
  std::shared_ptr<const Fn> fn_;
};

/// Oracle and named families by name; nullopt for an unknown name.
std::optional<PairColoring> coloring_family(const std::string& family, std::uint64_t seed);

enum class Sign { Plus, Minus };

/// (c1, c2, c3) for the readings X1 = (n1,n2,n3,n4), X2 = (n1,n3,n2,n4),
/// X3 = (n1,n4,n2,n3) of a quadruple n1 < n2 < n3 < n4; X = (a,b,a',b') is
/// + iff the pair ((a,b),(a',b')) is red.
struct Signature {
  std::array<Sign, 3> c{Sign::Plus, Sign::Plus, Sign::Plus};

  bool operator==(const Signature&) const = default;
  bool all_negative() const { return c[0] == Sign::Minus && c[1] == Sign::Minus && c[2] == Sign::Minus; }
  std::string str() const;  // e.g. "+-+"
};

/// color = 1 + 4[c1 = -] + 2[c2 = -] + [c3 = -]
Color signature_color(const Signature& s);
Signature signature_from_color(Color color);
std::optional<Signature> parse_signature(const std::string& text);

/// Signature of a 4-set (any order; throws DuplicateElements on repeats).
Signature signature_of(std::array<std::uint64_t, 4> X, const PairColoring& coloring);

/// The 8-colored 4-graph on 0..N-1 coloring each quadruple by its signature.
ColoredGraph induced_signature_graph(std::uint32_t N, const PairColoring& coloring);

struct Homogeneous {
  std::vector<Vertex> A;
  Signature signature;
};

/// Lexicographically least s-subset of 0..N-1 whose quadruples share one
/// signature; nothing when none exists at this N. Throws BudgetExhausted.
std::optional<Homogeneous> find_homogeneous(std::uint32_t N, const PairColoring& coloring, int s,
                                            const Budget& budget = {});

struct RedCliqueCert {
  std::vector<GridVertex> vertices;
};

struct Truncation {
  std::uint64_t P = 0;
  std::uint64_t E = 0;
  std::size_t chain_len = 0;
};

struct BlueOmega2Cert {
  /// prime -> increasing exponents e > 1, standing for the vertices (p, p^e)
  std::map<std::uint64_t, std::vector<std::uint64_t>> chains;
  Truncation truncation;

  std::vector<GridVertex> vertices() const;
};

using Certificate = std::variant<RedCliqueCert, BlueOmega2Cert>;

/// Minimum |A| for red_clique_from_positive(i, m, ...).
std::size_t red_pattern_size(int i, int m);

/// The red pattern for a positive coordinate i, relabeled through A
/// (index j stands for A[j]):
///   i = 1: (A[2k], A[2k+1]),   i = 2: (A[k], A[m+k]),   i = 3: (A[k], A[2m-k]),
/// for k < m. Throws PatternViolated if some pair is not red.
RedCliqueCert red_clique_from_positive(int i, int m, std::span<const Vertex> A, const PairColoring& coloring);

/// Primes up to P.
std::vector<std::uint64_t> primes_up_to(std::uint64_t P);

/// For every prime p <= P, extracts from L(p) = {(p, p^e) : 1 < e <= E} a
/// blue chain of chain_len vertices. When `red_fallback` > 0 and an
/// extraction yields a red set of that size, that red clique is returned
/// instead. Throws TruncationTooSmall when some chain cannot be completed
/// and BudgetExhausted when extraction runs out of evaluations
/// (budget.max_subsets).
std::variant<BlueOmega2Cert, RedCliqueCert> blue_omega2_construct(const PairColoring& coloring, std::uint64_t P,
                                                                  std::uint64_t E, std::size_t chain_len,
                                                                  const Budget& budget = {}, int red_fallback = 0);

enum class CrossPattern {
  Separated,    // p < p^s < q < q^t
  Interleaved,  // p < q < p^s < q^t
  Nested,       // p < q < q^t < p^s
};

/// How many of the three orderings hold for ((p, p^s), (q, q^t)), p < q.
int cross_pattern_matches(std::uint64_t p, std::uint64_t ps, std::uint64_t q, std::uint64_t qt);
std::optional<CrossPattern> classify_cross(std::uint64_t p, std::uint64_t ps, std::uint64_t q, std::uint64_t qt);

/// Red: all pairs red, vertices distinct. Blue: chains well-formed within
/// the truncation, all pairs blue, every cross-chain pair in exactly one of
/// the three orderings, and the vertex set in lexicographic order made of
/// one consecutive block per prime.
bool verify_certificate(const Certificate& cert, const PairColoring& coloring);

struct PipelineParams {
  std::uint32_t N = 24;
  int s = 8;
  std::uint64_t P = 7;
  std::uint64_t E = 8;
  std::size_t chain_len = 4;
};

struct PipelineOutcome {
  std::optional<Certificate> certificate;
  std::optional<Homogeneous> homogeneous;
  /// Positive coordinate used for the red pattern (0 when not used).
  int coordinate = 0;
  /// Failing stage when no certificate: "homogeneous", "red-clique" or "blue".
  std::string stage;
  std::string reason;
};

/// Red clique of size m or a blue truncated omega^2 set, following the
/// signature argument: homogeneous set, then either a red pattern for a
/// positive coordinate or, for (-,-,-), blue chains over prime powers.
/// Every returned certificate has passed verify_certificate.
PipelineOutcome f_m_omega2_pipeline(const PairColoring& coloring, int m, const PipelineParams& params = {},
                                    const Budget& budget = {});

}  // namespace ramsey::omega2
