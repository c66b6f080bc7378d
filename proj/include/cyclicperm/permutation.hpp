#pragma once

// One-line and standard cycle form representations of permutations of [n].
// Values are 1-based everywhere.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cyclicperm {

using Letter = int;

/// Largest size any representation accepts.
inline constexpr int kMaxSize = 20;

/// A permutation of {1..n} in one-line notation, values()[i-1] = pi(i).
class Permutation {
public:
  /// Validates `values` as a rearrangement of {1..n}; throws NotAPermutation.
  explicit Permutation(std::vector<Letter> values);
  Permutation(std::initializer_list<Letter> values)
      : Permutation(std::vector<Letter>(values)) {}

  [[nodiscard]] int size() const noexcept { return static_cast<int>(values_.size()); }
  [[nodiscard]] std::span<const Letter> values() const noexcept { return values_; }
  /// pi(i) for 1 <= i <= n.
  [[nodiscard]] Letter operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Letter> values_;
};

/// The cycle of a cyclic permutation written from 1: (1, c2, ..., cn).
class CycleForm {
public:
  /// Validates letters[0] == 1 and that letters rearranges {1..n}.
  explicit CycleForm(std::vector<Letter> letters);
  CycleForm(std::initializer_list<Letter> letters)
      : CycleForm(std::vector<Letter>(letters)) {}

  [[nodiscard]] int size() const noexcept { return static_cast<int>(letters_.size()); }
  [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
  /// c_i for 1 <= i <= n.
  [[nodiscard]] Letter at(int i) const { return letters_[static_cast<std::size_t>(i - 1)]; }
  /// j = c_2; 1 when n == 1.
  [[nodiscard]] Letter second() const noexcept { return letters_.size() > 1 ? letters_[1] : 1; }
  /// Index (0-based) of a letter inside the cycle.
  [[nodiscard]] int position_of(Letter x) const;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
  friend auto operator<=>(const CycleForm&, const CycleForm&) = default;

private:
  struct Trusted {};
  CycleForm(std::vector<Letter> letters, Trusted) : letters_(std::move(letters)) {}
  friend CycleForm standard_cycle_form(const Permutation& p);

  std::vector<Letter> letters_;
};

/// Throws NotAPermutation on duplicates, gaps, out-of-range values or n > kMaxSize.
Permutation make_permutation(std::vector<Letter> values);

/// pi(c_i) = c_{i+1}, pi(c_n) = 1.
Permutation to_one_line(const CycleForm& cf);

/// Throws NotCyclic when p has more than one cycle (fixed points included, n > 1).
CycleForm standard_cycle_form(const Permutation& p);

/// All n cyclic rotations of the cycle, read as flat words. Rotation 0 is cf itself.
std::vector<std::vector<Letter>> rotations(const CycleForm& cf);

/// True iff the orbit of 1 under p has size n.
bool is_cyclic(const Permutation& p);

/// True iff `values` is a rearrangement of {1..values.size()}.
bool is_rearrangement(std::span<const Letter> values) noexcept;

/// Concatenated digits when every entry is < 10 ("1432"), comma separated otherwise.
std::string to_string(std::span<const Letter> word);
std::string to_string(const Permutation& p);
/// "(1,3,2,4)".
std::string to_string(const CycleForm& cf);

/// Parses "1432", "1,4,3,2" or "(1,4,3,2)" into entries.
std::vector<Letter> parse_word(const std::string& text);

} // namespace cyclicperm
