#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace ramsey {

using Vertex = std::uint32_t;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Lexicographic walk over the k-element index sets of {0, ..., n-1}.
/// k = 0 yields exactly one (empty) combination; k > n yields none.
class Combination {
 public:
  Combination(std::size_t n, std::size_t k);

  bool valid() const { return valid_; }
  const std::vector<std::size_t>& indices() const { return idx_; }
  /// Advance; returns false once exhausted.
  bool next();

 private:
  std::size_t n_;
  std::vector<std::size_t> idx_;
  bool valid_;
};

/// All k-subsets of a sorted label list, as sorted label tuples in
/// lexicographic order.
class SubsetRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<Vertex>;
    using difference_type = std::ptrdiff_t;
    using reference = const std::vector<Vertex>&;
    using pointer = const std::vector<Vertex>*;

    iterator() = default;
    iterator(std::span<const Vertex> labels, std::size_t k);

    reference operator*() const { return members_; }
    pointer operator->() const { return &members_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !comb_.valid(); }

   private:
    void load();

    std::span<const Vertex> labels_;
    Combination comb_{0, 1};
    std::vector<Vertex> members_;
  };

  SubsetRange(std::span<const Vertex> labels, std::size_t k) : labels_(labels), k_(k) {}

  iterator begin() const { return iterator(labels_, k_); }
  std::default_sentinel_t end() const { return {}; }
  std::uint64_t size() const { return binomial(labels_.size(), k_); }

 private:
  std::span<const Vertex> labels_;
  std::size_t k_;
};

}  // namespace ramsey
