#include "ramsey/search.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "avoidance.hpp"
#include "ramsey/error.hpp"

namespace ramsey {
namespace {

class DynBitset {
 public:
  explicit DynBitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  void fill(std::size_t bits) {
    std::fill(words_.begin(), words_.end(), 0);
    for (std::size_t i = 0; i < bits; ++i) set(i);
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  /// Clears bits 0..v.
  void keep_above(std::size_t v) {
    const std::size_t w = v / 64;
    for (std::size_t i = 0; i < w && i < words_.size(); ++i) words_[i] = 0;
    if (w < words_.size()) {
      const unsigned b = static_cast<unsigned>(v % 64);
      words_[w] &= b == 63 ? 0 : ~((std::uint64_t{2} << b) - 1);
    }
  }

  /// Index of the first set bit at or after `from`, or size() when none.
  std::size_t next(std::size_t from) const {
    std::size_t w = from / 64;
    if (w >= words_.size()) return npos();
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (cur != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w >= words_.size()) return npos();
      cur = words_[w];
    }
  }
  std::size_t npos() const { return words_.size() * 64; }

 private:
  std::vector<std::uint64_t> words_;
};

void check_budget(std::uint64_t& nodes, const Budget& budget) {
  if (++nodes > budget.max_subsets) {
    throw Error(ErrorCode::BudgetExhausted, "subset search exceeded " + std::to_string(budget.max_subsets) + " nodes");
  }
}

// n = 2: per-color neighborhoods as bit vectors; the candidate set for each
// still-possible color shrinks by word-parallel intersection.
class PairMonoSearch {
 public:
  PairMonoSearch(const ColoredGraph& g, int h, const Budget& budget)
      : g_(g), h_(h), budget_(budget), size_(g.vertices().size()), r_(g.color_count()) {
    adj_.assign(static_cast<std::size_t>(r_), std::vector<DynBitset>(size_, DynBitset(size_)));
    const auto& vs = g.vertices();
    for (std::size_t a = 0; a < size_; ++a) {
      for (std::size_t b = a + 1; b < size_; ++b) {
        const Vertex e[2] = {vs[a], vs[b]};
        for (Color c : colors_of(g, e).to_vector()) {
          adj_[c - 1][a].set(b);
          adj_[c - 1][b].set(a);
        }
      }
    }
  }

  std::optional<MonoWitness> run() {
    std::vector<DynBitset> cand(static_cast<std::size_t>(r_), DynBitset(size_));
    for (auto& c : cand) c.fill(size_);
    if (rec(ColorSet::all(r_), cand)) {
      MonoWitness w;
      for (auto i : W_) w.W.push_back(g_.vertices()[i]);
      w.color = color_;
      return w;
    }
    return std::nullopt;
  }

 private:
  bool rec(ColorSet mask, const std::vector<DynBitset>& cand) {
    if (static_cast<int>(W_.size()) == h_) {
      color_ = mask.least();
      return true;
    }
    const std::size_t remaining = static_cast<std::size_t>(h_) - W_.size();
    DynBitset pool(size_);
    for (Color c : mask.to_vector()) pool |= cand[c - 1];
    std::vector<DynBitset> next(cand.size(), DynBitset(size_));
    for (std::size_t v = pool.next(0); v + remaining <= size_ && v < pool.npos(); v = pool.next(v + 1)) {
      check_budget(nodes_, budget_);
      ColorSet next_mask;
      for (Color c : mask.to_vector()) {
        if (!cand[c - 1].test(v)) continue;
        next[c - 1] = cand[c - 1];
        next[c - 1] &= adj_[c - 1][v];
        next[c - 1].keep_above(v);
        if (next[c - 1].count() + 1 >= remaining) next_mask.insert(c);
      }
      if (next_mask.empty()) continue;
      W_.push_back(v);
      if (rec(next_mask, next)) return true;
      W_.pop_back();
    }
    return false;
  }

  const ColoredGraph& g_;
  int h_;
  const Budget& budget_;
  std::size_t size_;
  int r_;
  std::vector<std::vector<DynBitset>> adj_;
  std::vector<std::size_t> W_;
  Color color_ = 0;
  std::uint64_t nodes_ = 0;
};

// Any arity: extend W in increasing order, intersecting the colors of the
// new edges each added vertex closes.
class GenericMonoSearch {
 public:
  GenericMonoSearch(const ColoredGraph& g, int h, const Budget& budget)
      : g_(g), h_(h), n_(g.arity()), budget_(budget), size_(g.vertices().size()) {
    constexpr std::uint64_t kCacheLimit = 1u << 22;
    const auto edges = binomial(size_, n_);
    if (edges <= kCacheLimit) {
      binom_.assign(size_ + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n_) + 1, 0));
      for (std::size_t v = 0; v <= size_; ++v) {
        for (int j = 0; j <= n_; ++j) binom_[v][j] = binomial(v, j);
      }
      cache_.assign(edges, ColorSet{});
      std::vector<Vertex> labels(n_);
      for (Combination comb(size_, n_); comb.valid(); comb.next()) {
        const auto& idx = comb.indices();
        for (int i = 0; i < n_; ++i) labels[i] = g.vertices()[idx[i]];
        cache_[colex(idx)] = colors_of(g, labels);
      }
    }
  }

  std::optional<MonoWitness> run() {
    if (rec(0, ColorSet::all(g_.color_count()))) {
      MonoWitness w;
      for (auto i : W_) w.W.push_back(g_.vertices()[i]);
      w.color = color_;
      return w;
    }
    return std::nullopt;
  }

 private:
  template <typename Indices>
  std::uint64_t colex(const Indices& idx) const {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) rank += binom_[idx[i]][i + 1];
    return rank;
  }

  ColorSet edge_colors(const std::vector<std::size_t>& idx) const {
    if (!cache_.empty()) return cache_[colex(idx)];
    std::vector<Vertex> labels;
    for (auto i : idx) labels.push_back(g_.vertices()[i]);
    return colors_of(g_, labels);
  }

  bool rec(std::size_t start, ColorSet mask) {
    if (static_cast<int>(W_.size()) == h_) {
      color_ = mask.least();
      return true;
    }
    const std::size_t remaining = static_cast<std::size_t>(h_) - W_.size();
    const std::size_t pick = static_cast<std::size_t>(n_) - 1;
    std::vector<std::size_t> tuple(static_cast<std::size_t>(n_));
    for (std::size_t v = start; v + remaining <= size_; ++v) {
      check_budget(nodes_, budget_);
      ColorSet m = mask;
      if (W_.size() >= pick) {
        for (Combination comb(W_.size(), pick); comb.valid() && !m.empty(); comb.next()) {
          const auto& idx = comb.indices();
          for (std::size_t i = 0; i < pick; ++i) tuple[i] = W_[idx[i]];
          tuple[pick] = v;
          m &= edge_colors(tuple);
        }
      }
      if (m.empty()) continue;
      W_.push_back(v);
      if (rec(v + 1, m)) return true;
      W_.pop_back();
    }
    return false;
  }

  const ColoredGraph& g_;
  int h_;
  int n_;
  const Budget& budget_;
  std::size_t size_;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<ColorSet> cache_;
  std::vector<std::size_t> W_;
  Color color_ = 0;
  std::uint64_t nodes_ = 0;
};

RamseyResult sweep(int r, int n, std::vector<int> q, const Budget& budget, int jobs) {
  if (r < 1 || r > kMaxColors) throw Error(ErrorCode::InvalidArgument, "r must be in 1..32");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (q.size() != static_cast<std::size_t>(r)) throw Error(ErrorCode::InvalidArgument, "need one size per color");
  for (int qi : q) {
    if (qi < n) throw Error(ErrorCode::InvalidArgument, "every forbidden size must be at least n");
  }

  // Colors with equal forbidden size are interchangeable: the first edge only
  // takes the least color of each such class.
  ColorSet first;
  for (int c = 1; c <= r; ++c) {
    if (std::find(q.begin(), q.begin() + (c - 1), q[c - 1]) == q.begin() + (c - 1)) first.insert(c);
  }

  RamseyResult res;
  res.r = r;
  res.n = n;
  res.q = q;
  const int k0 = *std::min_element(q.begin(), q.end());
  res.lower_bound = static_cast<std::uint64_t>(k0);
  {
    const auto edges = binomial(static_cast<std::uint64_t>(k0 - 1), n);
    res.witness = coloring_from_lex(k0 - 1, n, r, std::vector<Color>(edges, 1));
  }

  const detail::Rule rule = detail::SizeRule{q};
  for (int k = k0;; ++k) {
    if (static_cast<std::uint64_t>(k) > budget.max_depth || res.nodes >= budget.max_colorings) {
      res.exhausted = true;
      break;
    }
    auto out = detail::find_avoiding_coloring(k, n, r, rule, first, budget.max_colorings - res.nodes, jobs);
    res.nodes += out.nodes;
    if (out.status == detail::AvoidanceOutcome::Status::Found) {
      res.witness = coloring_from_lex(k, n, r, out.coloring);
      res.lower_bound = static_cast<std::uint64_t>(k) + 1;
    } else if (out.status == detail::AvoidanceOutcome::Status::NoneExists) {
      res.value = static_cast<std::uint64_t>(k);
      break;
    } else {
      res.exhausted = true;
      break;
    }
  }
  return res;
}

}  // namespace

std::optional<MonoWitness> find_mono(const ColoredGraph& graph, int h, const Budget& budget) {
  if (h < graph.arity()) throw Error(ErrorCode::InvalidArgument, "h must be at least the arity");
  if (static_cast<std::size_t>(h) > graph.vertices().size()) return std::nullopt;
  if (graph.arity() == 2) return PairMonoSearch(graph, h, budget).run();
  return GenericMonoSearch(graph, h, budget).run();
}

RamseyResult ramsey_number(int r, int n, int h, const Budget& budget, int jobs) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  return sweep(r, n, std::vector<int>(static_cast<std::size_t>(r), h), budget, jobs);
}

RamseyResult asymmetric_number(int n, std::span<const int> q, const Budget& budget, int jobs) {
  if (q.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one color");
  return sweep(static_cast<int>(q.size()), n, std::vector<int>(q.begin(), q.end()), budget, jobs);
}

std::uint64_t pigeonhole_number(std::uint64_t r, std::uint64_t h) {
  if (r < 1 || h < 1) throw Error(ErrorCode::InvalidArgument, "r and h must be positive");
  return r * (h - 1) + 1;
}

bool verify_avoidance(const ColoredGraph& graph, std::span<const int> q) {
  if (q.size() != static_cast<std::size_t>(graph.color_count())) {
    throw Error(ErrorCode::InvalidArgument, "need one forbidden size per color");
  }
  const auto& vs = graph.vertices();
  const auto n = static_cast<std::size_t>(graph.arity());
  for (int c = 1; c <= graph.color_count(); ++c) {
    const auto size = static_cast<std::size_t>(q[c - 1]);
    if (size < n) throw Error(ErrorCode::InvalidArgument, "forbidden size below arity");
    for (const auto& S : SubsetRange(vs, size)) {
      bool mono = true;
      for (const auto& e : SubsetRange(S, n)) {
        if (!colors_of(graph, e).contains(static_cast<Color>(c))) {
          mono = false;
          break;
        }
      }
      if (mono) return false;
    }
  }
  return true;
}

bool verify_avoidance(const ColoredGraph& graph, int h) {
  return verify_avoidance(graph, std::vector<int>(static_cast<std::size_t>(graph.color_count()), h));
}

ColoredGraph coloring_from_lex(int k, int n, int r, std::span<const Color> lex_colors, Vertex base) {
  ColorTable table;
  std::size_t i = 0;
  std::vector<Vertex> labels(static_cast<std::size_t>(std::max(k, 0)));
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = base + static_cast<Vertex>(v);
  for (const auto& e : SubsetRange(labels, static_cast<std::size_t>(n))) {
    if (i >= lex_colors.size()) throw Error(ErrorCode::InvalidArgument, "too few edge colors");
    table[e] = ColorSet::single(lex_colors[i++]);
  }
  if (i != lex_colors.size()) throw Error(ErrorCode::InvalidArgument, "too many edge colors");
  return make_graph(std::move(labels), n, r, ColoringSource::table(std::move(table)));
}

}  // namespace ramsey
