#pragma once

// Explicit member families and the size-changing bijections between classes.
// Nothing here is trusted: tests compare every family against the oracle.

#include "cyclicperm/chains.hpp"
#include "cyclicperm/cyclic_avoidance.hpp"
#include "cyclicperm/permutation.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cyclicperm {

struct FamilyMember {
  CycleForm cf;
  std::string family_tag;
  std::vector<int> parameters;
  /// The class the family is claimed to belong to.
  int k;
};

/// (1, 2, c3, ..., cn) -> (1, c3-1, ..., cn-1). Throws DomainError unless
/// n >= 3 and c_2 == 2.
CycleForm contract_leading_two(const CycleForm& cf);
/// (1, c2, ..., c_{n-1}) -> (1, 2, c2+1, ..., c_{n-1}+1). Throws DomainError for size < 2.
CycleForm expand_leading_two(const CycleForm& cf);

/// Drops a trailing n. Throws DomainError unless n >= 4 and the last letter is n.
CycleForm drop_trailing_max(const CycleForm& cf);
/// Appends n+1.
CycleForm append_max(const CycleForm& cf);

/// c_2 == j, letters 2..j-1 occur in increasing order, last letter is n.
bool has_trailing_max_shape(const CycleForm& cf, int j);

/// t = 1..floor((n-1)/2): (1, 3, 5, ..., 2t+1, 2t+2, ..., n, 2, 4, ..., 2t).
/// Throws DomainError for n < 5.
std::vector<CycleForm> gen_delta3_j3(int n);

/// (1, j, 2, j+1, 3, j+2, ..., j-2, 2j-3, 2j-2, ..., n, j-1).
/// Throws DomainError unless n >= 5 and 4 <= j <= floor((n+3)/2).
CycleForm gen_delta3_unique(int n, int j);

/// Two-chain cover of the one-line poset of gen_delta3_unique(n, j):
/// {1..j-2, 2j-3..n-1} and {j-1..2j-4, n}.
ChainCover delta3_unique_chain_cover(int n, int j);

/// (1, j, <placement ascending>, n, 2, 3, ..., j-1, <rest of [j+1, n-1] ascending>).
/// Throws DomainError unless n >= 6, 4 <= j <= n-1 and placement is inside [j+1, n-1].
CycleForm gen_delta4_case3(int n, int j, const std::set<int>& placement);

/// All 2^(n-j-1) outputs of gen_delta4_case3 at (n, j), placements ordered by bitmask.
std::vector<CycleForm> gen_delta4_case3_all(int n, int j);

/// The single case-(i) member for even n (j = (n+2)/2); empty for odd n.
std::optional<CycleForm> gen_delta4_case1(int n);

/// Three chains for a cycle (..., n, 2, ...) with n not last: letters before n,
/// letters from after n up to c_{n-1}, and {c_n, n}. Used for j = 3 and the
/// j >= 4 case (iii) shapes. Throws DomainError when n is last or 2 does not follow n.
ChainCover split_at_max_chain_cover(const CycleForm& cf);

/// Three chains for a case (iv) cycle (1, j, ..., 2, ..., i, ..., n, i+1, ..., j-1).
/// Throws DomainError when the cycle does not end with a run i+1..j-1 after n.
ChainCover case4_chain_cover(const CycleForm& cf);

/// Every explicit family for (n, k): k = 3 gives the j = 3 family and the
/// unique j >= 4 members; k = 4 gives case (i) and every case (iii) placement.
/// Throws DomainError for other k or n < 5 (k = 3) / n < 6 (k = 4).
std::vector<FamilyMember> families(int n, int k);

} // namespace cyclicperm
