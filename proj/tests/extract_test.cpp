#include <gtest/gtest.h>

#include <random>

#include "ramsey/error.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/serialize.hpp"

using namespace ramsey;

namespace {

ColoringSource alternating() {
  return ColoringSource::function(2, [](std::span<const Vertex> e) { return ColorSet::single(e[0] % 2 ? 2 : 1); });
}

ColoringSource planted_even() {
  return ColoringSource::function(2, [](std::span<const Vertex> e) {
    const bool even = std::all_of(e.begin(), e.end(), [](Vertex v) { return v % 2 == 0; });
    return ColorSet::single(even ? 1 : 2);
  });
}

ColoringSource single() {
  return ColoringSource::function(3, [](std::span<const Vertex>) { return ColorSet::single(1); });
}

}  // namespace

TEST(Extract, AlternatingVertexColoring) {
  const auto res = extract_mono(alternating(), 1, 2, 5, {0, 20});
  ASSERT_TRUE(res.W.has_value());
  EXPECT_EQ(*res.W, (std::vector<Vertex>{0, 2, 4, 6, 8}));  // 10 evens, 10 odds: tie goes to color 1
  EXPECT_EQ(res.color, 1u);
  EXPECT_EQ(res.trace.class_counts, (std::vector<std::size_t>{10, 10}));

  const auto odd = extract_mono(alternating(), 1, 2, 5, {1, 19});  // 10 odds, 9 evens
  EXPECT_EQ(*odd.W, (std::vector<Vertex>{1, 3, 5, 7, 9}));
  EXPECT_EQ(odd.color, 2u);
}

TEST(Extract, SingleColorTakesThePrefix) {
  for (int n = 1; n <= 3; ++n) {
    const auto res = extract_mono(single(), n, 3, 6, {10, 30});
    ASSERT_TRUE(res.W.has_value()) << n;
    EXPECT_EQ(*res.W, (std::vector<Vertex>{10, 11, 12, 13, 14, 15})) << n;
    EXPECT_EQ(res.color, 1u);
  }
}

TEST(Extract, PlantedEvenIsMonochromatic) {
  // Whichever color wins, the set must verify; the winner depends on how
  // many odd labels remain after each pivot.
  for (std::size_t count : {499u, 500u, 501u, 502u}) {
    const auto res = extract_mono(planted_even(), 2, 2, 6, {0, count});
    ASSERT_TRUE(res.W.has_value()) << count;
    EXPECT_TRUE(verify_extraction(*res.W, res.color, planted_even(), 2)) << count;
    if (res.color == 1) {
      for (Vertex v : *res.W) EXPECT_EQ(v % 2, 0u);
    }
  }
  // 0..500: 250 evens against 250 odds after the first pivot, a tie, so red.
  const auto red = extract_mono(planted_even(), 2, 2, 6, {0, 501});
  EXPECT_EQ(red.color, 1u);
  EXPECT_EQ(*red.W, (std::vector<Vertex>{0, 2, 4, 6, 8, 10}));
  // 0..499: 250 odds beat 249 evens, so the first pivot's link is blue.
  const auto blue = extract_mono(planted_even(), 2, 2, 6, {0, 500});
  EXPECT_EQ(blue.color, 2u);
  EXPECT_EQ(blue.trace.colors.front(), 2u);
}

TEST(Extract, ShortStreamFailsHonestly) {
  const auto res = extract_mono(ColoringSource::oracle(1, 3), 2, 3, 8, {0, 12});
  EXPECT_FALSE(res.W.has_value());
  EXPECT_FALSE(res.failure.empty());
  EXPECT_FALSE(res.out_of_evaluations);

  const auto capped = extract_mono(ColoringSource::oracle(1, 2), 2, 2, 4, {0, 400}, 50);
  EXPECT_FALSE(capped.W.has_value());
  EXPECT_TRUE(capped.out_of_evaluations);
  EXPECT_EQ(capped.trace.evaluations, 51u);
}

TEST(Extract, RejectsBadParameters) {
  EXPECT_THROW(extract_mono(single(), 0, 3, 3, {0, 10}), Error);
  EXPECT_THROW(extract_mono(single(), 3, 3, 2, {0, 10}), Error);
  EXPECT_THROW(extract_mono(single(), 1, 0, 2, {0, 10}), Error);
}

TEST(Extract, OverlappingColorsUseLeast) {
  // Every pair carries both colors: the link coloring reduces to color 1.
  const auto both = ColoringSource::function(2, [](std::span<const Vertex>) { return ColorSet(0b11); });
  const auto res = extract_mono(both, 2, 2, 4, {0, 8});
  ASSERT_TRUE(res.W.has_value());
  EXPECT_EQ(res.color, 1u);
}

TEST(VerifyExtraction, Examples) {
  // Pentagon red, pentagram blue; {0,1,2} contains the blue chord {0,2}.
  const auto c5 = ColoringSource::function(2, [](std::span<const Vertex> e) {
    const auto d = e[1] - e[0];
    return ColorSet::single(d == 1 || d == 4 ? 1 : 2);
  });
  const std::vector<Vertex> tri{0, 1, 2};
  EXPECT_FALSE(verify_extraction(tri, 1, c5, 2));
  const std::vector<Vertex> edge{0, 1};
  EXPECT_TRUE(verify_extraction(edge, 1, c5, 2));
  EXPECT_FALSE(verify_extraction(edge, 2, c5, 2));
  const std::vector<Vertex> dup{0, 0};
  EXPECT_FALSE(verify_extraction(dup, 1, c5, 2));
}

// Property: for n = 1 the result is exactly the majority class of the prefix.
TEST(ExtractProperty, BaseCaseIsMajority) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto seed = rng();
    const int r = 1 + static_cast<int>(rng() % 4);
    const std::size_t count = 1 + rng() % 60;
    const auto src = ColoringSource::oracle(seed, r);
    std::vector<std::size_t> counts(static_cast<std::size_t>(r), 0);
    for (Vertex v = 0; v < count; ++v) ++counts[src.colors_of(std::vector<Vertex>{v}).least() - 1];
    const auto best = static_cast<Color>(std::max_element(counts.begin(), counts.end()) - counts.begin()) + 1;
    const auto res = extract_mono(src, 1, r, 1, {0, count});
    EXPECT_EQ(res.trace.class_counts, counts);
    EXPECT_EQ(res.color, best);
    const auto all = extract_mono(src, 1, r, counts[best - 1], {0, count});
    ASSERT_TRUE(all.W.has_value());
    EXPECT_EQ(all.W->size(), counts[best - 1]);
    EXPECT_FALSE(extract_mono(src, 1, r, counts[best - 1] + 1, {0, count}).W.has_value());
  }
}

// Property: outputs verify, for arities up to 3 and up to 3 colors.
TEST(ExtractProperty, Sound) {
  std::mt19937_64 rng(21);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto seed = rng();
    const int n = 1 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % 3);
    const std::size_t t = static_cast<std::size_t>(n) + rng() % (7 - static_cast<std::size_t>(n));
    const std::size_t count = n == 3 ? 60 : 200;
    const auto src = ColoringSource::oracle(seed, r);
    const auto res = extract_mono(src, n, r, t, {0, count});
    if (!res.W) continue;
    ++found;
    EXPECT_EQ(res.W->size(), t);
    EXPECT_TRUE(verify_extraction(*res.W, res.color, src, n)) << "trial " << trial;
  }
  EXPECT_GT(found, 100);
}

// Property: pivots are the minima of shrinking pools.
TEST(ExtractProperty, TraceNests) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int r = 1 + static_cast<int>(rng() % 3);
    const auto res = extract_mono(ColoringSource::oracle(rng(), r), n, r, 5, {0, 80});
    const auto& tr = res.trace;
    ASSERT_EQ(tr.pivots.size(), tr.set_sizes.size());
    ASSERT_EQ(tr.pivots.size(), tr.colors.size());
    std::size_t prev = 80;
    for (std::size_t k = 0; k < tr.pivots.size(); ++k) {
      EXPECT_LT(tr.set_sizes[k], prev);  // V_k lies inside V_{k-1} minus v_k
      if (k > 0) {
        EXPECT_GT(tr.pivots[k], tr.pivots[k - 1]);
      }
      EXPECT_GE(tr.colors[k], 1u);
      EXPECT_LE(tr.colors[k], static_cast<Color>(r));
      prev = tr.set_sizes[k];
    }
    std::size_t total = 0;
    for (auto c : tr.class_counts) total += c;
    EXPECT_EQ(total, tr.pivots.size());
  }
}

// Property: identical inputs give byte-identical traces.
TEST(ExtractProperty, Deterministic) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const auto seed = rng();
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto a = extract_mono(ColoringSource::oracle(seed, 3), n, 3, 5, {0, 90});
    const auto b = extract_mono(ColoringSource::oracle(seed, 3), n, 3, 5, {0, 90});
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  }
}
