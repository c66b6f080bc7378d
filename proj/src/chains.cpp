#include "cyclicperm/chains.hpp"

#include "cyclicperm/patterns.hpp"

#include <algorithm>

namespace cyclicperm {

int max_antichain_size(const Permutation& p) { return lds_length(p.values()); }

ChainCover min_chain_cover(const Permutation& p) {
  ChainCover cover;
  // chain ids ordered by ascending last value
  std::vector<std::size_t> by_tail;
  std::vector<Letter> tail_values;
  for (int i = 1; i <= p.size(); ++i) {
    const Letter v = p(i);
    auto it = std::lower_bound(tail_values.begin(), tail_values.end(), v);
    if (it == tail_values.begin()) {
      cover.chains.push_back({i});
      by_tail.insert(by_tail.begin(), cover.chains.size() - 1);
      tail_values.insert(tail_values.begin(), v);
      continue;
    }
    const auto slot = static_cast<std::size_t>(it - tail_values.begin()) - 1;
    cover.chains[by_tail[slot]].push_back(i);
    tail_values[slot] = v;
  }
  return cover;
}

bool verify_chain_cover(const Permutation& p, const ChainCover& cover) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int covered = 0;
  for (const auto& chain : cover.chains) {
    for (std::size_t t = 0; t < chain.size(); ++t) {
      const int idx = chain[t];
      if (idx < 1 || idx > n || seen[static_cast<std::size_t>(idx)]) {
        return false;
      }
      seen[static_cast<std::size_t>(idx)] = true;
      ++covered;
      if (t > 0 && (chain[t - 1] >= idx || p(chain[t - 1]) >= p(idx))) {
        return false;
      }
    }
  }
  return covered == n;
}

ChainCover chain_cover_from_sets(std::vector<std::vector<int>> sets) {
  ChainCover cover;
  for (auto& s : sets) {
    if (s.empty()) {
      continue;
    }
    std::sort(s.begin(), s.end());
    cover.chains.push_back(std::move(s));
  }
  return cover;
}

} // namespace cyclicperm
