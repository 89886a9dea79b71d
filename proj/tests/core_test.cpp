#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "ramsey/error.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/mix.hpp"
#include "ramsey/ncolor.hpp"
#include "ramsey/subsets.hpp"

using namespace ramsey;

namespace {

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ramsey::Error thrown";
  return ErrorCode::InvalidArgument;
}

ColoredGraph c5() {
  // Pentagon red, pentagram blue.
  ColorTable t;
  for (Vertex a = 0; a < 5; ++a) {
    for (Vertex b = a + 1; b < 5; ++b) {
      const bool side = (b - a) == 1 || (b - a) == 4;
      t[{a, b}] = ColorSet::single(side ? 1 : 2);
    }
  }
  return make_graph(5, 2, 2, ColoringSource::table(t));
}

}  // namespace

TEST(Mix, MatchesSplitMix64ReferenceStream) {
  // First outputs of the reference splitmix64 generator seeded with 0.
  std::uint64_t state = 0;
  const std::uint64_t expected[] = {0xe220a8397b1dcdafULL, 0x6e789e6aa1b965f4ULL, 0x06c45d188009454fULL};
  for (auto want : expected) {
    EXPECT_EQ(mix64(state), want);
    state += 0x9e3779b97f4a7c15ULL;
  }
}

TEST(Mix, FoldIsOrderedChain) {
  const std::uint64_t labels[] = {3, 7, 11};
  EXPECT_EQ(fold_labels(labels), mix64(mix64(mix64(3) ^ 7) ^ 11));
  EXPECT_EQ(fold_labels({}), 0u);
}

TEST(ColorSetTest, Basics) {
  ColorSet s;
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.least(), 0u);
  s.insert(3);
  s.insert(5);
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.least(), 3u);
  EXPECT_EQ(s.greatest(), 5u);
  EXPECT_EQ(s.to_vector(), (std::vector<Color>{3, 5}));
  EXPECT_TRUE((s & ColorSet::single(5)) == ColorSet::single(5));
  EXPECT_EQ(ColorSet::all(32).size(), 32);
  EXPECT_FALSE(s.contains(0));
  EXPECT_FALSE(s.contains(33));
}

TEST(Subsets, CombinationCountsMatchBinomial) {
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      std::uint64_t count = 0;
      std::vector<std::size_t> prev;
      for (Combination c(n, k); c.valid(); c.next()) {
        ++count;
        EXPECT_TRUE(prev.empty() || prev < c.indices());
        prev = c.indices();
      }
      EXPECT_EQ(count, binomial(n, k)) << n << " choose " << k;
    }
  }
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(Subsets, RangeYieldsLabelTuples) {
  const std::vector<Vertex> labels{2, 5, 9, 10};
  std::vector<std::vector<Vertex>> got;
  for (const auto& s : SubsetRange(labels, 2)) got.push_back(s);
  ASSERT_EQ(got.size(), 6u);
  EXPECT_EQ(got.front(), (std::vector<Vertex>{2, 5}));
  EXPECT_EQ(got.back(), (std::vector<Vertex>{9, 10}));
  EXPECT_EQ(SubsetRange(labels, 0).size(), 1u);
}

TEST(Graph, RejectsMalformedColorings) {
  EXPECT_EQ(code_of([] { make_graph(std::vector<Vertex>{1, 1, 2}, 2, 2, ColoringSource::oracle(1, 2)); }),
            ErrorCode::DuplicateElements);
  EXPECT_EQ(code_of([] { make_graph(3, 2, 2, ColoringSource::table({{{0, 1}, ColorSet::single(1)}})); }),
            ErrorCode::CoveringViolation);
  EXPECT_EQ(code_of([] {
              ColorTable t{{{0, 1}, ColorSet::single(3)}};
              make_graph(2, 2, 2, ColoringSource::table(t));
            }),
            ErrorCode::ColorOutOfRange);
  EXPECT_EQ(code_of([] {
              ColorTable t{{{0, 1, 2}, ColorSet::single(1)}};
              make_graph(3, 2, 2, ColoringSource::table(t));
            }),
            ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([] { make_graph(4, 2, 3, ColoringSource::oracle(1, 2)); }), ErrorCode::InvalidArgument);
}

TEST(Graph, OverlappingColorsAndQueries) {
  ColorTable t{{{0, 1}, ColorSet(0b11)}, {{0, 2}, ColorSet::single(1)}, {{1, 2}, ColorSet::single(2)}};
  const auto g = make_graph(3, 2, 2, ColoringSource::table(t));
  EXPECT_EQ(colors_of(g, std::vector<Vertex>{0, 1}), ColorSet(0b11));
  EXPECT_EQ(is_monochromatic(g, std::vector<Vertex>{0, 1}), Color{1});
  EXPECT_EQ(is_monochromatic(g, std::vector<Vertex>{0, 1, 2}), std::nullopt);
  EXPECT_EQ(code_of([&] { colors_of(g, std::vector<Vertex>{0, 7}); }), ErrorCode::UnknownEdge);
  EXPECT_EQ(code_of([&] { common_colors(g, std::vector<Vertex>{0}); }), ErrorCode::TooSmall);
  EXPECT_EQ(code_of([&] { restrict_to(g, {0, 5}); }), ErrorCode::NotASubset);
}

TEST(Graph, TableKeysAreNormalized) {
  ColorTable t{{{1, 0}, ColorSet::single(1)}, {{0, 1}, ColorSet::single(2)}};
  const auto g = make_graph(2, 2, 2, ColoringSource::table(t));
  EXPECT_EQ(colors_of(g, std::vector<Vertex>{0, 1}), ColorSet(0b11));
}

TEST(Graph, C5HasNoMonochromaticTriangle) {
  const auto g = c5();
  for (const auto& tri : SubsetRange(g.vertices(), 3)) EXPECT_FALSE(is_monochromatic(g, tri).has_value());
}

// Property: restriction commutes with edge colors and preserves monochromatic sets.
TEST(GraphProperty, RestrictionClosure) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % 3);
    const auto g = oracle::random_graph(rng, k, n, r, 0.3);
    std::vector<Vertex> W;
    for (Vertex v : g.vertices()) {
      if (rng() & 1) W.push_back(v);
    }
    const auto sub = restrict_to(g, W);
    EXPECT_EQ(sub.vertices(), W);
    EXPECT_EQ(sub.edge_count(), binomial(W.size(), static_cast<std::uint64_t>(n)));
    for (const auto& e : edges_of(sub)) EXPECT_EQ(colors_of(sub, e), colors_of(g, e));
    if (W.size() >= static_cast<std::size_t>(n)) {
      EXPECT_EQ(common_colors(sub, W), common_colors(g, W));
    }
  }
}

// Property: the oracle is a pure function of (seed, edge) and lands in 1..r.
TEST(ColoringProperty, OracleDeterministicAndInRange) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto seed = rng();
    const int r = 1 + static_cast<int>(rng() % 32);
    const auto a = ColoringSource::oracle(seed, r);
    const auto b = ColoringSource::oracle(seed, r);
    std::vector<Vertex> edge{static_cast<Vertex>(rng() % 100), static_cast<Vertex>(100 + rng() % 100)};
    const auto c = a.colors_of(edge);
    EXPECT_EQ(c, b.colors_of(edge));
    EXPECT_EQ(c.size(), 1);
    EXPECT_GE(c.least(), 1u);
    EXPECT_LE(c.least(), static_cast<Color>(r));
    const std::uint64_t wide[] = {edge[0], edge[1]};
    EXPECT_EQ(c.least(), oracle_color(seed, fold_labels(wide), static_cast<std::uint32_t>(r)));
  }
}

TEST(ColoringProperty, OracleUsesEveryColor) {
  const auto src = ColoringSource::oracle(99, 5);
  std::set<Color> seen;
  for (Vertex a = 0; a < 40; ++a) seen.insert(src.colors_of(std::vector<Vertex>{a, a + 1}).least());
  EXPECT_EQ(seen.size(), 5u);
}

TEST(Ncolor, ParsesTableWithOverlapsAndComments) {
  const auto g = parse_ncolor(
      "# triangle\n"
      "ncolor n=2 r=3 v=3\n"
      "table\n"
      "0 1 1,3\n"
      "\n"
      "1 2 2\n"
      "0 2 3\n");
  EXPECT_EQ(g.arity(), 2);
  EXPECT_EQ(g.color_count(), 3);
  EXPECT_EQ(colors_of(g, std::vector<Vertex>{0, 1}), ColorSet(0b101));
}

TEST(Ncolor, OracleAndBase) {
  const auto g = parse_ncolor("ncolor n=3 r=4 v=6 base=1\noracle seed=42\n");
  EXPECT_EQ(g.vertices().front(), 1u);
  EXPECT_EQ(g.vertices().back(), 6u);
  EXPECT_EQ(g.source().kind(), ColoringSource::Kind::Oracle);
  EXPECT_EQ(to_ncolor(g), "ncolor n=3 r=4 v=6 base=1\noracle seed=42\n");
}

TEST(Ncolor, RejectsBadInput) {
  EXPECT_EQ(code_of([] { parse_ncolor(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_ncolor("ncolor n=2 r=2\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_ncolor("ncolor n=2 r=2 v=2\nlist\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_ncolor("ncolor n=2 r=2 v=2\ntable\n0 1 x\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_ncolor("ncolor n=2 r=2 v=2\ntable\n0 1 3\n"); }), ErrorCode::ColorOutOfRange);
  EXPECT_EQ(code_of([] { parse_ncolor("ncolor n=2 r=2 v=3\ntable\n0 1 1\n"); }), ErrorCode::CoveringViolation);
  EXPECT_EQ(code_of([] { load_ncolor("/nonexistent/file.ncolor"); }), ErrorCode::ParseError);
}

// Property: to_ncolor then parse_ncolor reproduces every edge's color set.
TEST(NcolorProperty, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % std::min(3, k));
    const int r = 1 + static_cast<int>(rng() % 4);
    const auto g = oracle::random_graph(rng, k, n, r, 0.4, static_cast<Vertex>(rng() % 3));
    const auto back = parse_ncolor(to_ncolor(g));
    ASSERT_EQ(back.vertices(), g.vertices());
    for (const auto& e : edges_of(g)) EXPECT_EQ(colors_of(back, e), colors_of(g, e));
  }
}

TEST(Ncolor, PaleyFixtureShape) {
  const auto g = load_ncolor(RAMSEY_TEST_DATA "/paley17.ncolor");
  EXPECT_EQ(g.vertices().size(), 17u);
  EXPECT_EQ(g.edge_count(), 136u);
  int red = 0;
  for (const auto& e : edges_of(g)) red += colors_of(g, e).contains(1);
  EXPECT_EQ(red, 68);  // 17 * 8 / 2
}
