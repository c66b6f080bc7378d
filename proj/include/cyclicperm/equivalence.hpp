#pragma once

// Exhaustive checks of the structural equivalences over every standard cycle
// form of each size.

#include "cyclicperm/permutation.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace cyclicperm {

enum class EquivalenceCheck {
  /// all rotations avoid 1432 <=> cycle form avoids 321 and 2143 (n >= 1)
  rotations_vs_321_2143,
  /// avoids 321 and 2143 <=> c_2 structure predicate (n >= 5, c_2 >= 3)
  c2_structure,
  /// avoids 321 and 2143 => one-line has no decreasing run of length 5 (n >= 5)
  delta5_redundant,
};

/// "rotations", "c2-structure", "delta5". The parser also takes the aliases
/// "prop21", "lemma22", "lemma41".
std::string_view to_string(EquivalenceCheck c);
std::optional<EquivalenceCheck> parse_equivalence_check(std::string_view text);

struct EquivalenceResult {
  EquivalenceCheck check;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t forms_checked = 0;
  std::uint64_t counterexamples = 0;
  std::optional<CycleForm> first_counterexample;

  [[nodiscard]] bool ok() const noexcept { return counterexamples == 0; }
};

/// Largest n accepted by run_equivalence.
inline constexpr int kMaxEquivalenceSize = 11;

/// Throws DomainError when n_max is below the check's starting size or above 11.
EquivalenceResult run_equivalence(EquivalenceCheck check, int n_max);

} // namespace cyclicperm
