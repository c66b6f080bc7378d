#pragma once

// Exhaustive counting over the (n-1)! standard cycle forms of size n.
//
// This is the oracle the closed forms are checked against, so it evaluates
// membership by definition at every leaf (one-line delta_k test plus all n
// rotations against tau). Pruning only discards prefixes that provably
// contain a forbidden pattern in rotation 0 or, for tau = 1432, contain 321
// or 2143.

#include "cyclicperm/cyclic_avoidance.hpp"
#include "cyclicperm/permutation.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclicperm {

/// Largest n the exhaustive counters accept.
inline constexpr int kMaxEnumerationSize = 12;

/// Shapes of delta_4 members with j = c_2 >= 4.
enum class Delta4Case { i, ii, iii, iv, j_eq_n_minus_1, j_eq_n };

std::string_view to_string(Delta4Case c);
std::optional<Delta4Case> parse_delta4_case(std::string_view text);

struct CountReport {
  int n = 0;
  std::optional<int> k;
  Pattern tau = Pattern{1, 4, 3, 2};
  std::uint64_t total = 0;
  /// keys exactly 2..n
  std::map<int, std::uint64_t> per_j;
  /// (j, case) -> count; present only for k = 4, tau = 1432, n >= 6
  std::optional<std::map<std::pair<int, Delta4Case>, std::uint64_t>> delta4_cases;

  /// Sum of case counts over every j for one case.
  [[nodiscard]] std::uint64_t case_total(Delta4Case c) const;
  [[nodiscard]] std::uint64_t case_count(int j, Delta4Case c) const;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

struct EnumerationOptions {
  bool prune = true;
};

/// Sequential oracle. Throws DomainError for n < 2, LimitExceeded for n > 12.
CountReport count_brute(const ClassQuery& q, EnumerationOptions opts = {});

/// Same result as count_brute, computed by `parts` worker threads over
/// independent prefix units (1, c2, c3). Merge is addition in unit order.
CountReport count_brute_partitioned(const ClassQuery& q, unsigned parts,
                                    EnumerationOptions opts = {});

/// Classifies a delta_4 member with j >= 4, n >= 6.
/// Throws DomainError when cf is not such a member or matches no case shape.
Delta4Case classify_delta4(const CycleForm& cf);

/// All members of the class (optionally with c_2 == j), lexicographic order.
std::vector<CycleForm> list_members(const ClassQuery& q, std::optional<int> j = std::nullopt);

/// Visits every standard cycle form of size n in lexicographic order.
void for_each_cycle_form(int n, const std::function<void(const CycleForm&)>& visit);

} // namespace cyclicperm
