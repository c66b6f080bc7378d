#pragma once

// Closed forms for a_n(delta_k; 1432) and its refinements by j = c_2.
// Every function is exact integer arithmetic. Requests outside the range the
// closed forms are stated for come back with domain_ok() == false instead of
// an extrapolated value.

#include "cyclicperm/enumeration.hpp"

#include <cstdint>
#include <optional>

namespace cyclicperm {

class FormulaValue {
public:
  static FormulaValue of(std::uint64_t v) { return FormulaValue(v); }
  static FormulaValue outside_domain() { return FormulaValue(); }

  [[nodiscard]] bool domain_ok() const noexcept { return value_.has_value(); }
  /// Throws std::bad_optional_access when outside the domain.
  [[nodiscard]] std::uint64_t value() const { return value_.value(); }
  [[nodiscard]] const std::optional<std::uint64_t>& get() const noexcept { return value_; }

  friend bool operator==(const FormulaValue&, const FormulaValue&) = default;

private:
  FormulaValue() = default;
  explicit FormulaValue(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// Largest n any formula evaluates.
inline constexpr int kMaxFormulaSize = kMaxSize;

std::uint64_t binomial(int n, int r);

/// k = 3: floor((n^2+7)/2) - 2n; k = 4: 2^(n-1) - floor((3n-5)/2);
/// k >= 5: 2^n + 1 - 2n - C(n,3). Outside domain for n < 5.
/// Throws DomainError for k < 3 or n > 20.
FormulaValue total_formula(int n, int k);

/// a_{n,j}(delta_3; 1432). Throws DomainError for n < 5 or j outside [2, n].
FormulaValue delta3_refined_formula(int n, int j);

/// j = 2, j = 3, or the aggregate over 4 <= j <= n.
enum class Delta4Slot { j2, j3, tail };

/// a_{n,j}(delta_4; 1432) for a slot. Throws DomainError for n < 6.
FormulaValue delta4_refined_formula(int n, Delta4Slot slot);

/// Case counts of delta_4 members with j >= 4. Cases iii and iv take
/// 4 <= j <= n-2; the remaining cases are aggregates and take no j.
/// Throws DomainError for n < 6 or a missing/extra/out-of-range j.
FormulaValue delta4_case_formula(int n, Delta4Case c, std::optional<int> j = std::nullopt);

/// Cyclic permutations whose standard cycle form avoids 321 and 2143:
/// 2^n + 1 - 2n - C(n,3). Throws DomainError for n < 1 or n > 20.
FormulaValue avoiding_321_2143_total(int n);

/// Members with j = 3 ending in (n-1, n) for delta_4: floor((n-3)/2), n >= 5.
std::uint64_t j3_trailing_pair_count(int n);
/// Members with 4 <= j <= n-2 ending in (n-1, n), letters 2..j-1 in order,
/// for delta_4: floor((n-5)/2), n >= 6.
std::uint64_t tail_trailing_pair_count(int n);

} // namespace cyclicperm
