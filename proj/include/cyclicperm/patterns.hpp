#pragma once

// Classical pattern containment on words of distinct integers.
//
// A word need not be a permutation of {1..n}; only the relative order of its
// entries matters, so cyclic rotations of a cycle form can be tested as-is.
// All comparisons are strict.

#include "cyclicperm/permutation.hpp"

#include <span>
#include <string>
#include <vector>

namespace cyclicperm {

using Word = std::span<const Letter>;

/// Order-isomorphism template: a permutation of {1..k}.
class Pattern {
public:
  explicit Pattern(Permutation shape) : shape_(std::move(shape)) {}
  Pattern(std::initializer_list<Letter> shape) : shape_(std::vector<Letter>(shape)) {}

  /// Parses "1432" style text; throws NotAPermutation.
  static Pattern parse(const std::string& text);
  /// k(k-1)...21.
  static Pattern decreasing(int k);

  [[nodiscard]] int size() const noexcept { return shape_.size(); }
  [[nodiscard]] std::span<const Letter> values() const noexcept { return shape_.values(); }
  [[nodiscard]] const Permutation& permutation() const noexcept { return shape_; }
  [[nodiscard]] std::string str() const { return to_string(shape_); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
  Permutation shape_;
};

/// True iff some subsequence of `w` is order-isomorphic to `sigma`.
/// Backtracking over positions; intended for |sigma| <= 5 and |w| <= 12.
bool contains(Word w, const Pattern& sigma);

inline bool avoids(Word w, const Pattern& sigma) { return !contains(w, sigma); }

/// Length of the longest strictly decreasing subsequence, O(n log n).
int lds_length(Word w);

/// Permutations of S_m avoiding both 123 and 321, by filtering all m!.
std::vector<Pattern> avoiding_123_and_321(int m);

/// The S4 instance: {2143, 2413, 3142, 3412}.
inline std::vector<Pattern> s4_avoiding_123_and_321() { return avoiding_123_and_321(4); }

} // namespace cyclicperm
