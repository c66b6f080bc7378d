#include "cyclicperm/cyclic_avoidance.hpp"

#include "cyclicperm/errors.hpp"

#include <array>

namespace cyclicperm {

ClassQuery ClassQuery::make(int n, std::optional<int> k, Pattern tau) {
  if (n < 1 || n > kMaxSize) {
    throw DomainError("n must lie in [1, " + std::to_string(kMaxSize) + "]");
  }
  if (k && *k < 3) {
    throw DomainError("k must be at least 3");
  }
  if (tau.size() != 4) {
    throw DomainError("tau must have length 4");
  }
  return ClassQuery{n, k, std::move(tau)};
}

ClassQuery ClassQuery::make(int n, std::optional<int> k) { return make(n, k, pattern_1432()); }

const Pattern& pattern_1432() {
  static const Pattern p{1, 4, 3, 2};
  return p;
}

bool all_rotations_avoid(std::span<const Letter> cycle_letters, const Pattern& tau) {
  const auto n = cycle_letters.size();
  std::array<Letter, 2 * kMaxSize> doubled{};
  for (std::size_t i = 0; i < n; ++i) {
    doubled[i] = cycle_letters[i];
    doubled[i + n] = cycle_letters[i];
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (contains(Word(doubled.data() + r, n), tau)) {
      return false;
    }
  }
  return true;
}

bool all_rotations_avoid(const CycleForm& cf, const Pattern& tau) {
  return all_rotations_avoid(cf.letters(), tau);
}

bool avoids_321_and_2143(std::span<const Letter> word) {
  static const Pattern p2143{2, 1, 4, 3};
  return lds_length(word) < 3 && avoids(word, p2143);
}

bool avoids_321_and_2143(const CycleForm& cf) { return avoids_321_and_2143(cf.letters()); }

namespace {

bool increasing(const std::vector<Letter>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i - 1] >= xs[i]) {
      return false;
    }
  }
  return true;
}

} // namespace

bool c2_structure_holds(const CycleForm& cf) {
  const int n = cf.size();
  const Letter j = cf.second();
  if (n < 5 || j < 3) {
    throw DomainError("structure predicate needs n >= 5 and c_2 >= 3");
  }
  const auto letters = cf.letters();

  std::vector<Letter> small;  // letters 2..j-1 in cycle order
  for (Letter x : letters) {
    if (x >= 2 && x <= j - 1) {
      small.push_back(x);
    }
  }
  if (!increasing(small)) {
    return false;
  }

  const int pos_before = cf.position_of(j - 1);
  std::vector<Letter> between;
  for (int i = 2; i < pos_before; ++i) {
    if (letters[static_cast<std::size_t>(i)] > j) {
      between.push_back(letters[static_cast<std::size_t>(i)]);
    }
  }
  if (!increasing(between)) {
    return false;
  }

  const int pos_two = cf.position_of(2);
  std::vector<Letter> after_two;
  for (int i = pos_two + 1; i < n; ++i) {
    if (letters[static_cast<std::size_t>(i)] > j) {
      after_two.push_back(letters[static_cast<std::size_t>(i)]);
    }
  }
  return increasing(after_two);
}

bool is_member(const CycleForm& cf, const ClassQuery& q) {
  if (cf.size() != q.n) {
    throw DomainError("cycle size " + std::to_string(cf.size()) + " does not match query n " +
                      std::to_string(q.n));
  }
  if (q.k && lds_length(to_one_line(cf).values()) >= *q.k) {
    return false;
  }
  return all_rotations_avoid(cf, q.tau);
}

} // namespace cyclicperm
