#include "ramsey/coloring.hpp"

#include <algorithm>
#include <array>

#include "ramsey/error.hpp"
#include "ramsey/mix.hpp"

namespace ramsey {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CoveringViolation: return "CoveringViolation";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::DuplicateElements: return "DuplicateElements";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::PatternViolated: return "PatternViolated";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

ColoringSource ColoringSource::table(ColorTable entries) {
  ColorTable normalized;
  for (auto& [edge, colors] : entries) {
    Edge key = edge;
    std::sort(key.begin(), key.end());
    auto& slot = normalized[std::move(key)];
    slot = slot | colors;
  }
  ColoringSource src;
  src.kind_ = Kind::Table;
  src.name_ = "table";
  src.table_ = std::make_shared<const ColorTable>(std::move(normalized));
  return src;
}

ColoringSource ColoringSource::oracle(std::uint64_t seed, int r) {
  if (r < 1 || r > kMaxColors) throw Error(ErrorCode::InvalidArgument, "oracle needs 1 <= r <= 32");
  ColoringSource src;
  src.kind_ = Kind::Oracle;
  src.r_ = r;
  src.seed_ = seed;
  src.name_ = "oracle";
  return src;
}

ColoringSource ColoringSource::function(int r, ColorFunction fn, std::string name) {
  if (r < 1 || r > kMaxColors) throw Error(ErrorCode::InvalidArgument, "function coloring needs 1 <= r <= 32");
  ColoringSource src;
  src.kind_ = Kind::Function;
  src.r_ = r;
  src.name_ = std::move(name);
  src.fn_ = std::make_shared<const ColorFunction>(std::move(fn));
  return src;
}

const ColorTable& ColoringSource::entries() const {
  static const ColorTable kEmpty;
  return table_ ? *table_ : kEmpty;
}

ColorSet ColoringSource::colors_of(std::span<const Vertex> edge) const {
  switch (kind_) {
    case Kind::Table: {
      auto it = table_->find(Edge(edge.begin(), edge.end()));
      return it == table_->end() ? ColorSet{} : it->second;
    }
    case Kind::Oracle: {
      std::array<std::uint64_t, 16> small{};
      std::vector<std::uint64_t> large;
      std::span<std::uint64_t> labels;
      if (edge.size() <= small.size()) {
        labels = std::span(small.data(), edge.size());
      } else {
        large.resize(edge.size());
        labels = large;
      }
      std::copy(edge.begin(), edge.end(), labels.begin());
      const auto h = fold_labels(labels);
      return ColorSet::single(oracle_color(seed_, h, static_cast<std::uint32_t>(r_)));
    }
    case Kind::Function:
      return (*fn_)(edge);
  }
  return {};
}

}  // namespace ramsey
