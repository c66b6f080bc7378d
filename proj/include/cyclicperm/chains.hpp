#pragma once

// The poset S_pi on [n]: i <= j iff i <= j and pi(i) <= pi(j).
// Chains are increasing subsequences of the one-line word, antichains are
// decreasing ones, so Dilworth's theorem ties the minimum chain cover to the
// longest decreasing subsequence.

#include "cyclicperm/permutation.hpp"

#include <vector>

namespace cyclicperm {

/// A partition of the indices {1..n} into chains of S_pi. Each chain lists
/// indices in increasing order.
struct ChainCover {
  std::vector<std::vector<int>> chains;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(chains.size()); }
  friend bool operator==(const ChainCover&, const ChainCover&) = default;
};

int max_antichain_size(const Permutation& p);

/// Greedy patience partition: each index joins the chain with the largest
/// last value still below pi(i), or opens a new chain.
ChainCover min_chain_cover(const Permutation& p);

/// True iff `cover` partitions {1..n} and every chain increases in both index
/// and value.
bool verify_chain_cover(const Permutation& p, const ChainCover& cover);

/// Builds a cover from arbitrary index sets: each set is sorted, empty sets dropped.
ChainCover chain_cover_from_sets(std::vector<std::vector<int>> sets);

} // namespace cyclicperm
