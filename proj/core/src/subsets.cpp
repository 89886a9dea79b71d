#include "ramsey/subsets.hpp"

#include <limits>

namespace ramsey {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step
    const auto next = static_cast<unsigned __int128>(result) * (n - k + i) / i;
    if (next > kMax) return kMax;
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

Combination::Combination(std::size_t n, std::size_t k) : n_(n), idx_(k), valid_(k <= n) {
  for (std::size_t i = 0; i < k; ++i) idx_[i] = i;
}

bool Combination::next() {
  if (!valid_) return false;
  const std::size_t k = idx_.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx_[i] < n_ - k + i) {
      ++idx_[i];
      for (std::size_t j = i + 1; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
      return true;
    }
  }
  valid_ = false;
  return false;
}

SubsetRange::iterator::iterator(std::span<const Vertex> labels, std::size_t k)
    : labels_(labels), comb_(labels.size(), k) {
  load();
}

SubsetRange::iterator& SubsetRange::iterator::operator++() {
  comb_.next();
  load();
  return *this;
}

void SubsetRange::iterator::load() {
  if (!comb_.valid()) return;
  const auto& idx = comb_.indices();
  members_.resize(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) members_[i] = labels_[idx[i]];
}

}  // namespace ramsey
