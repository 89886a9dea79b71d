#include "ramsey/ph.hpp"

#include <algorithm>
#include <string>

#include "avoidance.hpp"
#include "ramsey/error.hpp"
#include "ramsey/search.hpp"

namespace ramsey {
namespace {

void check_params(int r, int n, int h) {
  if (r < 1 || r > kMaxColors) throw Error(ErrorCode::InvalidArgument, "r must be in 1..32");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (h < n) throw Error(ErrorCode::InvalidArgument, "h must be at least n");
}

class LargeSetSearch {
 public:
  LargeSetSearch(const ColoredGraph& g, const Budget& budget)
      : g_(g), n_(static_cast<std::size_t>(g.arity())), k_(static_cast<Vertex>(g.vertices().size())),
        budget_(budget) {}

  // Lexicographically least monochromatic set of exactly `size` labels whose
  // smallest label is m.
  std::optional<PHWitness> first_with_min(Vertex m, std::size_t size) {
    H_.assign(1, m);
    ColorSet mask = ColorSet::all(g_.color_count());
    if (n_ == 1) mask = colors_of(g_, H_);
    if (rec(mask, size)) return PHWitness{H_, color_};
    return std::nullopt;
  }

 private:
  bool rec(ColorSet mask, std::size_t size) {
    if (H_.size() == size) {
      color_ = mask.least();
      return true;
    }
    const std::size_t remaining = size - H_.size();
    for (Vertex v = H_.back() + 1; v + remaining - 1 <= k_; ++v) {
      if (++nodes_ > budget_.max_subsets) {
        throw Error(ErrorCode::BudgetExhausted, "witness search exceeded " + std::to_string(budget_.max_subsets));
      }
      ColorSet m = mask;
      if (H_.size() + 1 >= n_) {
        std::vector<Vertex> edge(n_);
        for (Combination comb(H_.size(), n_ - 1); comb.valid() && !m.empty(); comb.next()) {
          const auto& idx = comb.indices();
          for (std::size_t i = 0; i + 1 < n_; ++i) edge[i] = H_[idx[i]];
          edge[n_ - 1] = v;
          m &= colors_of(g_, edge);
        }
      }
      if (m.empty()) continue;
      H_.push_back(v);
      if (rec(m, size)) return true;
      H_.pop_back();
    }
    return false;
  }

  const ColoredGraph& g_;
  std::size_t n_;
  Vertex k_;
  const Budget& budget_;
  std::vector<Vertex> H_;
  Color color_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

const char* to_string(PHStatus status) {
  switch (status) {
    case PHStatus::Holds: return "holds";
    case PHStatus::Fails: return "fails";
    case PHStatus::Unknown: return "unknown";
  }
  return "unknown";
}

bool ph_parameters_large(int r, int n, int h) { return r > 2 || n > 2 || h > 3; }

std::optional<PHWitness> check_coloring_ph(const ColoredGraph& graph, int h, const Budget& budget) {
  const auto& vs = graph.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] != i + 1) throw Error(ErrorCode::InvalidArgument, "vertices must be labelled 1..k");
  }
  if (h < graph.arity()) throw Error(ErrorCode::InvalidArgument, "h must be at least n");
  const auto k = static_cast<Vertex>(vs.size());
  LargeSetSearch search(graph, budget);
  // A witness with minimum m contains one of size exactly max(h, m) with the
  // same minimum, and that one is lexicographically smaller.
  for (Vertex m = 1; m <= k; ++m) {
    const auto size = static_cast<std::size_t>(std::max<Vertex>(static_cast<Vertex>(h), m));
    if (m - 1 + size > k) break;
    if (auto w = search.first_with_min(m, size)) return w;
  }
  return std::nullopt;
}

bool is_ph_witness(const ColoredGraph& graph, const PHWitness& witness, int h) {
  if (witness.H.empty()) return false;
  const auto size = witness.H.size();
  const auto least = *std::min_element(witness.H.begin(), witness.H.end());
  if (size < static_cast<std::size_t>(h) || size < least) return false;
  return common_colors(graph, witness.H).contains(witness.color);
}

PHVerdict holds_p(int r, int n, int h, int k, const Budget& budget, int jobs) {
  check_params(r, n, h);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  PHVerdict verdict;
  verdict.r = r;
  verdict.n = n;
  verdict.h = h;
  verdict.k = k;
  // The property does not depend on color names: fix the first edge to color 1.
  auto out = detail::find_avoiding_coloring(k, n, r, detail::LargeSetRule{h}, ColorSet::single(1),
                                            budget.max_colorings, jobs);
  verdict.nodes = out.nodes;
  switch (out.status) {
    case detail::AvoidanceOutcome::Status::Found:
      verdict.status = PHStatus::Fails;
      verdict.counterexample = coloring_from_lex(k, n, r, out.coloring, 1);
      break;
    case detail::AvoidanceOutcome::Status::NoneExists:
      verdict.status = PHStatus::Holds;
      break;
    case detail::AvoidanceOutcome::Status::Exhausted:
      verdict.status = PHStatus::Unknown;
      break;
  }
  return verdict;
}

PHNumberResult ph_number(int r, int n, int h, const Budget& budget, int jobs) {
  check_params(r, n, h);
  PHNumberResult res;
  for (int k = 1; static_cast<std::uint64_t>(k) <= budget.max_depth && res.nodes < budget.max_colorings; ++k) {
    Budget left = budget;
    left.max_colorings = budget.max_colorings - res.nodes;
    auto verdict = holds_p(r, n, h, k, left, jobs);
    res.nodes += verdict.nodes;
    const auto status = verdict.status;
    res.verdicts.push_back(std::move(verdict));
    if (status == PHStatus::Holds) {
      res.value = k;
      res.lower_bound = k;
      return res;
    }
    if (status == PHStatus::Unknown) {
      res.lower_bound = k;
      return res;
    }
    res.lower_bound = k + 1;
  }
  return res;
}

}  // namespace ramsey
