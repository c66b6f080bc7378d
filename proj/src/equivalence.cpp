#include "cyclicperm/equivalence.hpp"

#include "cyclicperm/cyclic_avoidance.hpp"
#include "cyclicperm/enumeration.hpp"
#include "cyclicperm/errors.hpp"

namespace cyclicperm {

std::string_view to_string(EquivalenceCheck c) {
  switch (c) {
  case EquivalenceCheck::rotations_vs_321_2143: return "rotations";
  case EquivalenceCheck::c2_structure: return "c2-structure";
  case EquivalenceCheck::delta5_redundant: return "delta5";
  }
  return "?";
}

std::optional<EquivalenceCheck> parse_equivalence_check(std::string_view text) {
  for (auto c : {EquivalenceCheck::rotations_vs_321_2143, EquivalenceCheck::c2_structure,
                 EquivalenceCheck::delta5_redundant}) {
    if (text == to_string(c)) {
      return c;
    }
  }
  // short aliases kept for existing scripts
  if (text == "prop21") return EquivalenceCheck::rotations_vs_321_2143;
  if (text == "lemma22") return EquivalenceCheck::c2_structure;
  if (text == "lemma41") return EquivalenceCheck::delta5_redundant;
  return std::nullopt;
}

EquivalenceResult run_equivalence(EquivalenceCheck check, int n_max) {
  EquivalenceResult result;
  result.check = check;
  result.n_min = check == EquivalenceCheck::rotations_vs_321_2143 ? 1 : 5;
  result.n_max = n_max;
  if (n_max < result.n_min || n_max > kMaxEquivalenceSize) {
    throw DomainError("n_max for " + std::string(to_string(check)) + " must lie in [" +
                      std::to_string(result.n_min) + ", " +
                      std::to_string(kMaxEquivalenceSize) + "]");
  }
  const Pattern& p1432 = pattern_1432();

  for (int n = result.n_min; n <= n_max; ++n) {
    for_each_cycle_form(n, [&](const CycleForm& cf) {
      bool holds = true;
      switch (check) {
      case EquivalenceCheck::rotations_vs_321_2143:
        holds = all_rotations_avoid(cf, p1432) == avoids_321_and_2143(cf);
        break;
      case EquivalenceCheck::c2_structure:
        if (cf.second() < 3) {
          return;
        }
        holds = avoids_321_and_2143(cf) == c2_structure_holds(cf);
        break;
      case EquivalenceCheck::delta5_redundant:
        holds = !avoids_321_and_2143(cf) || lds_length(to_one_line(cf).values()) <= 4;
        break;
      }
      ++result.forms_checked;
      if (!holds) {
        ++result.counterexamples;
        if (!result.first_counterexample) {
          result.first_counterexample = cf;
        }
      }
    });
  }
  return result;
}

} // namespace cyclicperm
