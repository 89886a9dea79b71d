#include "avoidance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "ramsey/subsets.hpp"

namespace ramsey::detail {
namespace {

using Word = std::uint64_t;

constexpr std::size_t kMaxPrefixes = 256;
constexpr std::uint64_t kCancelPollMask = 0xfff;

struct Problem {
  Problem(int k, int n, int r, const Rule& rule) : k(k), n(n), r(r), rule(rule), edges(lex_edges(k, n)) {
    binom.assign(static_cast<std::size_t>(k) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 2, 0));
    for (int v = 0; v <= k; ++v) {
      for (int j = 0; j <= n + 1; ++j) binom[v][j] = binomial(v, j);
    }
    colex_of_lex.reserve(edges.size());
    for (const auto& e : edges) colex_of_lex.push_back(colex(e.data(), e.size()));
  }

  std::uint64_t colex(const std::uint32_t* members, std::size_t count) const {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < count; ++i) rank += binom[members[i]][i + 1];
    return rank;
  }

  bool bitset_path() const { return n == 2 && k <= 64; }

  int k, n, r;
  Rule rule;
  std::vector<std::vector<std::uint32_t>> edges;
  std::vector<std::vector<std::uint64_t>> binom;
  std::vector<std::uint64_t> colex_of_lex;
};

class Searcher {
 public:
  enum class Result { Found, NoneExists, Exhausted, Cancelled };

  Searcher(const Problem& p, ColorSet first, std::uint64_t cap)
      : p_(p), first_(first), cap_(cap), colors_(p.edges.size(), 0) {
    if (p_.bitset_path()) adj_.assign(static_cast<std::size_t>(p_.r), std::vector<Word>(p_.k, 0));
  }

  void watch(const std::atomic<std::size_t>* best_found, std::size_t my_index) {
    best_found_ = best_found;
    my_index_ = my_index;
  }

  std::uint64_t nodes() const { return nodes_; }

  std::vector<Color> lex_coloring() const {
    std::vector<Color> out;
    out.reserve(p_.edges.size());
    for (auto colex : p_.colex_of_lex) out.push_back(colors_[colex]);
    return out;
  }

  void load_prefix(const std::vector<Color>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) assign(i, prefix[i]);
  }

  void collect(std::size_t pos, std::size_t depth, std::vector<std::vector<Color>>& out) {
    if (pos == depth) {
      std::vector<Color> prefix(depth);
      for (std::size_t i = 0; i < depth; ++i) prefix[i] = colors_[p_.colex_of_lex[i]];
      out.push_back(std::move(prefix));
      return;
    }
    for (Color c : allowed(pos).to_vector()) {
      assign(pos, c);
      if (!completes(pos, c)) collect(pos + 1, depth, out);
      unassign(pos, c);
    }
  }

  Result dfs(std::size_t pos) {
    if (pos == p_.edges.size()) return Result::Found;
    for (Color c : allowed(pos).to_vector()) {
      if (++nodes_ > cap_) return Result::Exhausted;
      if ((nodes_ & kCancelPollMask) == 0 && cancelled()) return Result::Cancelled;
      assign(pos, c);
      if (!completes(pos, c)) {
        const Result res = dfs(pos + 1);
        if (res != Result::NoneExists) return res;
      }
      unassign(pos, c);
    }
    return Result::NoneExists;
  }

 private:
  ColorSet allowed(std::size_t pos) const { return pos == 0 ? first_ : ColorSet::all(p_.r); }

  bool cancelled() const {
    return best_found_ != nullptr && best_found_->load(std::memory_order_relaxed) < my_index_;
  }

  void assign(std::size_t lex, Color c) {
    colors_[p_.colex_of_lex[lex]] = c;
    if (p_.bitset_path()) {
      const auto& e = p_.edges[lex];
      adj_[c - 1][e[0]] |= Word{1} << e[1];
      adj_[c - 1][e[1]] |= Word{1} << e[0];
    }
  }

  void unassign(std::size_t lex, Color c) {
    colors_[p_.colex_of_lex[lex]] = 0;
    if (p_.bitset_path()) {
      const auto& e = p_.edges[lex];
      adj_[c - 1][e[0]] &= ~(Word{1} << e[1]);
      adj_[c - 1][e[1]] &= ~(Word{1} << e[0]);
    }
  }

  Color color_of(std::vector<std::uint32_t>& tuple) const {
    std::sort(tuple.begin(), tuple.end());
    return colors_[p_.colex(tuple.data(), tuple.size())];
  }

  // Every n-subset of S + {x} that contains x has color c.
  bool consistent(const std::vector<std::uint32_t>& S, std::uint32_t x, Color c) const {
    const std::size_t pick = static_cast<std::size_t>(p_.n) - 1;
    std::vector<std::uint32_t> tuple(p_.n);
    for (Combination comb(S.size(), pick); comb.valid(); comb.next()) {
      const auto& idx = comb.indices();
      for (std::size_t i = 0; i < pick; ++i) tuple[i] = S[idx[i]];
      tuple[pick] = x;
      if (color_of(tuple) != c) return false;
    }
    return true;
  }

  // Adds `need` elements from [lo, hi) to S keeping S monochromatic in c.
  bool extend(std::vector<std::uint32_t>& S, std::uint32_t lo, std::uint32_t hi, int need, Color c) const {
    if (need == 0) return true;
    for (std::uint32_t x = lo; x + static_cast<std::uint32_t>(need) <= hi; ++x) {
      if (!consistent(S, x, c)) continue;
      S.push_back(x);
      const bool ok = extend(S, x + 1, hi, need - 1, c);
      S.pop_back();
      if (ok) return true;
    }
    return false;
  }

  bool clique(Word cand, int need, Color c) const {
    if (need == 0) return true;
    while (std::popcount(cand) >= need) {
      const int x = std::countr_zero(cand);
      cand &= cand - 1;
      if (clique(cand & adj_[c - 1][x], need - 1, c)) return true;
    }
    return false;
  }

  static Word below(std::uint32_t v) { return v >= 64 ? ~Word{0} : (Word{1} << v) - 1; }

  // Whether coloring edge `lex` with c completes a forbidden set whose
  // lexicographically largest edge is this one. Checking only those sets at
  // each assignment catches every forbidden set exactly when it closes.
  bool completes(std::size_t lex, Color c) const {
    const auto& e = p_.edges[lex];
    const std::uint32_t e0 = e[0];
    if (const auto* size_rule = std::get_if<SizeRule>(&p_.rule)) {
      const int need = size_rule->q[c - 1] - p_.n;
      if (need <= 0) return true;
      if (p_.bitset_path()) {
        return clique(adj_[c - 1][e[0]] & adj_[c - 1][e[1]] & below(e0), need, c);
      }
      std::vector<std::uint32_t> S(e.begin(), e.end());
      return extend(S, 0, e0, need, c);
    }

    const int h = std::get<LargeSetRule>(p_.rule).h;
    // H = e alone: min label e0 + 1, size n.
    if (std::max<int>(h, static_cast<int>(e0) + 1) == p_.n) return true;
    if (p_.bitset_path()) {
      const Word cand = adj_[c - 1][e[0]] & adj_[c - 1][e[1]] & below(e0);
      for (Word rest = cand; rest != 0; rest &= rest - 1) {
        const auto t0 = static_cast<std::uint32_t>(std::countr_zero(rest));
        const int need = std::max<int>(h, static_cast<int>(t0) + 1) - 3;
        if (need < 0) continue;
        if (clique(cand & adj_[c - 1][t0] & ~below(t0 + 1), need, c)) return true;
      }
      return false;
    }
    std::vector<std::uint32_t> S(e.begin(), e.end());
    for (std::uint32_t t0 = 0; t0 < e0; ++t0) {
      const int need = std::max<int>(h, static_cast<int>(t0) + 1) - p_.n - 1;
      if (need < 0 || !consistent(S, t0, c)) continue;
      S.push_back(t0);
      const bool ok = extend(S, t0 + 1, e0, need, c);
      S.pop_back();
      if (ok) return true;
    }
    return false;
  }

  const Problem& p_;
  ColorSet first_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<Color> colors_;                 // by colex rank, 0 = unassigned
  std::vector<std::vector<Word>> adj_;        // [color-1][vertex], n = 2 only
  const std::atomic<std::size_t>* best_found_ = nullptr;
  std::size_t my_index_ = 0;
};

std::size_t split_depth(std::size_t edge_count, int r) {
  std::size_t depth = 0;
  std::size_t prefixes = 1;
  while (depth < edge_count && depth < 8 && prefixes * static_cast<std::size_t>(r) <= kMaxPrefixes) {
    prefixes *= static_cast<std::size_t>(r);
    ++depth;
  }
  return depth;
}

struct SubtreeResult {
  Searcher::Result result = Searcher::Result::Cancelled;
  std::uint64_t nodes = 0;
  std::vector<Color> coloring;
};

}  // namespace

std::vector<std::vector<std::uint32_t>> lex_edges(int k, int n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (Combination comb(static_cast<std::size_t>(k), static_cast<std::size_t>(n)); comb.valid(); comb.next()) {
    const auto& idx = comb.indices();
    out.emplace_back(idx.begin(), idx.end());
  }
  return out;
}

AvoidanceOutcome find_avoiding_coloring(int k, int n, int r, const Rule& rule, ColorSet first_edge_colors,
                                        std::uint64_t max_nodes, int jobs) {
  const Problem problem(k, n, r, rule);
  AvoidanceOutcome outcome;
  if (problem.edges.empty()) {
    outcome.status = AvoidanceOutcome::Status::Found;
    return outcome;
  }

  std::vector<std::vector<Color>> prefixes;
  {
    Searcher root(problem, first_edge_colors, max_nodes);
    root.collect(0, split_depth(problem.edges.size(), r), prefixes);
  }

  std::vector<SubtreeResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_found{std::numeric_limits<std::size_t>::max()};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
      if (best_found.load() < i) continue;
      Searcher s(problem, first_edge_colors, max_nodes);
      s.watch(&best_found, i);
      s.load_prefix(prefixes[i]);
      auto& res = results[i];
      res.result = s.dfs(prefixes[i].size());
      res.nodes = s.nodes();
      if (res.result == Searcher::Result::Found) {
        res.coloring = s.lex_coloring();
        std::size_t cur = best_found.load();
        while (i < cur && !best_found.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const int workers = std::clamp<int>(jobs, 1, static_cast<int>(std::max<std::size_t>(prefixes.size(), 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Replay in DFS order so the answer and node count match a single worker.
  std::uint64_t total = 0;
  for (auto& res : results) {
    total += res.nodes;
    if (total > max_nodes || res.result == Searcher::Result::Exhausted) {
      outcome.status = AvoidanceOutcome::Status::Exhausted;
      outcome.nodes = std::min(total, max_nodes);
      return outcome;
    }
    if (res.result == Searcher::Result::Found) {
      outcome.status = AvoidanceOutcome::Status::Found;
      outcome.coloring = std::move(res.coloring);
      outcome.nodes = total;
      return outcome;
    }
  }
  outcome.status = AvoidanceOutcome::Status::NoneExists;
  outcome.nodes = total;
  return outcome;
}

}  // namespace ramsey::detail
