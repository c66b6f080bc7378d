#include "cyclicperm/formulas.hpp"

#include "cyclicperm/errors.hpp"

#include <string>

namespace cyclicperm {

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

void check_upper(int n) {
  if (n > kMaxFormulaSize) {
    throw DomainError("formulas are evaluated for n <= " + std::to_string(kMaxFormulaSize));
  }
}

FormulaValue nonnegative(std::int64_t v) {
  if (v < 0) {
    throw DomainError("formula produced a negative count");
  }
  return FormulaValue::of(static_cast<std::uint64_t>(v));
}

} // namespace

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) {
    return 0;
  }
  if (r > n - r) {
    r = n - r;
  }
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) {
    // exact at every step: out * (n-r+i) is divisible by i
    out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return out;
}

FormulaValue total_formula(int n, int k) {
  if (k < 3) {
    throw DomainError("k must be at least 3");
  }
  check_upper(n);
  if (n < 5) {
    return FormulaValue::outside_domain();
  }
  const std::int64_t m = n;
  switch (k) {
  case 3: return nonnegative((m * m + 7) / 2 - 2 * m);
  case 4: return nonnegative(pow2(n - 1) - (3 * m - 5) / 2);
  default: return avoiding_321_2143_total(n);
  }
}

FormulaValue avoiding_321_2143_total(int n) {
  if (n < 1) {
    throw DomainError("n must be positive");
  }
  check_upper(n);
  return nonnegative(pow2(n) + 1 - 2 * std::int64_t{n} -
                     static_cast<std::int64_t>(binomial(n, 3)));
}

FormulaValue delta3_refined_formula(int n, int j) {
  if (n < 5 || j < 2 || j > n) {
    throw DomainError("delta_3 refinement needs n >= 5 and 2 <= j <= n");
  }
  check_upper(n);
  if (j == 2) {
    return total_formula(n - 1, 3);
  }
  if (j == 3) {
    return FormulaValue::of(static_cast<std::uint64_t>((n - 1) / 2));
  }
  return FormulaValue::of(j <= (n + 3) / 2 ? 1 : 0);
}

FormulaValue delta4_refined_formula(int n, Delta4Slot slot) {
  if (n < 6) {
    throw DomainError("delta_4 refinement needs n >= 6");
  }
  check_upper(n);
  switch (slot) {
  case Delta4Slot::j2: return total_formula(n - 1, 4);
  case Delta4Slot::j3: return nonnegative(pow2(n - 4) + (n - 2) / 2);
  case Delta4Slot::tail: return nonnegative(3 * pow2(n - 4) - n + n / 2);
  }
  throw DomainError("unknown slot");
}

FormulaValue delta4_case_formula(int n, Delta4Case c, std::optional<int> j) {
  if (n < 6) {
    throw DomainError("delta_4 case counts need n >= 6");
  }
  check_upper(n);
  const bool per_j = c == Delta4Case::iii || c == Delta4Case::iv;
  if (per_j != j.has_value()) {
    throw DomainError(per_j ? "cases iii and iv need j" : "aggregate case takes no j");
  }
  if (per_j && (*j < 4 || *j > n - 2)) {
    throw DomainError("cases iii and iv need 4 <= j <= n-2");
  }
  switch (c) {
  case Delta4Case::i: return FormulaValue::of(n % 2 == 0 ? 1 : 0);
  case Delta4Case::ii: return FormulaValue::of(tail_trailing_pair_count(n));
  case Delta4Case::iii: return nonnegative(pow2(n - *j - 1));
  case Delta4Case::iv: return nonnegative(static_cast<std::int64_t>(binomial(n - 3, *j - 3)) - 1);
  case Delta4Case::j_eq_n_minus_1: return FormulaValue::of(static_cast<std::uint64_t>(n - 3));
  case Delta4Case::j_eq_n: return FormulaValue::of(1);
  }
  throw DomainError("unknown case");
}

std::uint64_t j3_trailing_pair_count(int n) {
  if (n < 5) {
    throw DomainError("defined for n >= 5");
  }
  return static_cast<std::uint64_t>((n - 3) / 2);
}

std::uint64_t tail_trailing_pair_count(int n) {
  if (n < 6) {
    throw DomainError("defined for n >= 6");
  }
  return static_cast<std::uint64_t>((n - 5) / 2);
}

} // namespace cyclicperm
