#pragma once

// Avoidance classes of cyclic permutations: a one-line restriction by the
// decreasing pattern delta_k combined with a restriction on every rotation of
// the standard cycle form.

#include "cyclicperm/patterns.hpp"
#include "cyclicperm/permutation.hpp"

#include <optional>
#include <span>

namespace cyclicperm {

/// Membership query for A_n(delta_k; tau). k == nullopt drops the one-line condition.
struct ClassQuery {
  int n;
  std::optional<int> k;
  Pattern tau;

  /// Throws DomainError unless n >= 1, k >= 3 when present, |tau| == 4.
  static ClassQuery make(int n, std::optional<int> k, Pattern tau);
  /// tau = 1432.
  static ClassQuery make(int n, std::optional<int> k);
};

const Pattern& pattern_1432();

/// Every rotation of cf avoids tau. Early exit on the first containing rotation.
bool all_rotations_avoid(const CycleForm& cf, const Pattern& tau);
bool all_rotations_avoid(std::span<const Letter> cycle_letters, const Pattern& tau);

/// cf read as a word avoids both 321 and 2143; equivalent to all rotations
/// avoiding 1432.
bool avoids_321_and_2143(const CycleForm& cf);
bool avoids_321_and_2143(std::span<const Letter> word);

/// With j = c_2: letters 2..j-1 in increasing order; letters > j between j and
/// j-1 increasing; letters > j after 2 increasing.
/// Throws DomainError when n < 5 or c_2 < 3.
bool c2_structure_holds(const CycleForm& cf);

/// One-line of cf avoids delta_k (when k is set) and all rotations avoid tau.
/// Throws DomainError if cf.size() != q.n.
bool is_member(const CycleForm& cf, const ClassQuery& q);

} // namespace cyclicperm
