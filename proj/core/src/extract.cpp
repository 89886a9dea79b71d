#include "ramsey/extract.hpp"

#include <algorithm>
#include <string>

#include "ramsey/error.hpp"
#include "ramsey/subsets.hpp"

namespace ramsey {
namespace {

struct OutOfEvaluations {};

struct Homogeneous {
  std::vector<Vertex> set;
  Color color = 1;
};

Color most_frequent(const std::vector<std::size_t>& counts) {
  const auto it = std::max_element(counts.begin(), counts.end());  // first maximum = least color
  return static_cast<Color>(it - counts.begin()) + 1;
}

class Extractor {
 public:
  Extractor(const ColoringSource& src, int r, std::uint64_t max_evaluations)
      : src_(src), r_(r), max_evaluations_(max_evaluations) {}

  std::uint64_t evaluations() const { return evaluations_; }

  // `fixed` holds the pivots of the enclosing levels, all below every label
  // of `pool`. At the outermost level (fixed empty) an edge keeps its full
  // color set; inside a link coloring it is reduced to its least color.
  Homogeneous level(std::vector<Vertex>& fixed, const std::vector<Vertex>& pool, int arity, std::size_t target,
                    ExtractTrace* trace) {
    if (arity == 1) return base(fixed, pool, trace);

    std::vector<Vertex> P = pool;
    std::vector<std::size_t> counts(static_cast<std::size_t>(r_), 0);
    std::vector<Vertex> pivots;
    std::vector<Color> pivot_colors;
    while (P.size() >= static_cast<std::size_t>(arity)) {
      const Vertex v = P.front();
      const std::vector<Vertex> rest(P.begin() + 1, P.end());
      fixed.push_back(v);
      Homogeneous sub = level(fixed, rest, arity - 1, 0, nullptr);
      fixed.pop_back();

      pivots.push_back(v);
      pivot_colors.push_back(sub.color);
      ++counts[sub.color - 1];
      if (trace != nullptr) {
        trace->pivots.push_back(v);
        trace->set_sizes.push_back(sub.set.size());
        trace->colors.push_back(sub.color);
      }
      P = std::move(sub.set);
      if (target != 0 && counts[sub.color - 1] >= target) break;
    }

    Homogeneous out;
    out.color = most_frequent(counts);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (pivot_colors[k] == out.color) out.set.push_back(pivots[k]);
    }
    if (trace != nullptr) {
      trace->class_counts = counts;
      trace->final_color = out.color;
    }
    return out;
  }

 private:
  Homogeneous base(std::vector<Vertex>& fixed, const std::vector<Vertex>& pool, ExtractTrace* trace) {
    std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(r_));
    for (Vertex x : pool) {
      for (Color c : colors(fixed, x).to_vector()) {
        if (c <= static_cast<Color>(r_)) classes[c - 1].push_back(x);
      }
    }
    std::vector<std::size_t> counts;
    for (const auto& cls : classes) counts.push_back(cls.size());
    Homogeneous out;
    out.color = most_frequent(counts);
    out.set = std::move(classes[out.color - 1]);
    if (trace != nullptr) {
      trace->class_counts = counts;
      trace->final_color = out.color;
    }
    return out;
  }

  ColorSet colors(std::vector<Vertex>& fixed, Vertex x) {
    if (++evaluations_ > max_evaluations_) throw OutOfEvaluations{};
    fixed.push_back(x);
    ColorSet cs = src_.colors_of(fixed);
    fixed.pop_back();
    if (fixed.size() > 0 && !cs.empty()) cs = ColorSet::single(cs.least());
    if (cs.empty()) throw Error(ErrorCode::CoveringViolation, "coloring left an edge uncolored");
    return cs;
  }

  const ColoringSource& src_;
  int r_;
  std::uint64_t max_evaluations_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace

std::vector<Vertex> VertexStream::labels() const {
  std::vector<Vertex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + static_cast<Vertex>(i);
  return out;
}

ExtractResult extract_mono(const ColoringSource& coloring, int n, int r, std::size_t t, const VertexStream& stream,
                           std::uint64_t max_evaluations) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (r < 1 || r > kMaxColors) throw Error(ErrorCode::InvalidArgument, "r must be in 1..32");
  if (t < static_cast<std::size_t>(n)) throw Error(ErrorCode::InvalidArgument, "size must be at least n");

  ExtractResult result;
  Extractor extractor(coloring, r, max_evaluations);
  std::vector<Vertex> fixed;
  try {
    Homogeneous found = extractor.level(fixed, stream.labels(), n, t, &result.trace);
    result.trace.evaluations = extractor.evaluations();
    if (found.set.size() >= t) {
      found.set.resize(t);
      result.W = std::move(found.set);
      result.color = found.color;
    } else {
      result.failure = "stream prefix of " + std::to_string(stream.count) + " vertices yields only " +
                       std::to_string(found.set.size()) + " < " + std::to_string(t) + " vertices of color " +
                       std::to_string(found.color);
    }
  } catch (const OutOfEvaluations&) {
    result.trace.evaluations = extractor.evaluations();
    result.out_of_evaluations = true;
    result.failure = "evaluation budget of " + std::to_string(max_evaluations) + " exhausted";
  }
  return result;
}

bool verify_extraction(std::span<const Vertex> W, Color color, const ColoringSource& coloring, int n) {
  std::vector<Vertex> members(W.begin(), W.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;
  if (members.size() < static_cast<std::size_t>(n)) return false;
  for (const auto& edge : SubsetRange(members, static_cast<std::size_t>(n))) {
    if (!coloring.colors_of(edge).contains(color)) return false;
  }
  return true;
}

}  // namespace ramsey
