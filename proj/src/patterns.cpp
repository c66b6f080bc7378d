#include "cyclicperm/patterns.hpp"

#include "cyclicperm/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace cyclicperm {

Pattern Pattern::parse(const std::string& text) { return Pattern(Permutation(parse_word(text))); }

Pattern Pattern::decreasing(int k) {
  if (k < 1) {
    throw DomainError("decreasing pattern needs k >= 1");
  }
  std::vector<Letter> values(static_cast<std::size_t>(k));
  std::iota(values.rbegin(), values.rend(), 1);
  return Pattern(Permutation(std::move(values)));
}

namespace {

constexpr int kMaxPatternLength = kMaxSize;

// Extends a partial occurrence: chosen[0..depth) are positions in w matching
// sigma[0..depth). Every candidate must agree in relative order with all
// previously chosen entries.
bool extend(Word w, std::span<const Letter> sigma, std::array<int, kMaxPatternLength>& chosen,
            int depth, int start) {
  const int k = static_cast<int>(sigma.size());
  if (depth == k) {
    return true;
  }
  const int n = static_cast<int>(w.size());
  const int last_start = n - (k - depth);
  for (int pos = start; pos <= last_start; ++pos) {
    const Letter value = w[static_cast<std::size_t>(pos)];
    bool consistent = true;
    for (int prev = 0; prev < depth && consistent; ++prev) {
      const bool below_in_word = value < w[static_cast<std::size_t>(chosen[prev])];
      const bool below_in_sigma = sigma[static_cast<std::size_t>(depth)] <
                                  sigma[static_cast<std::size_t>(prev)];
      consistent = below_in_word == below_in_sigma;
    }
    if (!consistent) {
      continue;
    }
    chosen[static_cast<std::size_t>(depth)] = pos;
    if (extend(w, sigma, chosen, depth + 1, pos + 1)) {
      return true;
    }
  }
  return false;
}

} // namespace

bool contains(Word w, const Pattern& sigma) {
  if (sigma.size() > static_cast<int>(w.size())) {
    return false;
  }
  std::array<int, kMaxPatternLength> chosen{};
  return extend(w, sigma.values(), chosen, 0, 0);
}

int lds_length(Word w) {
  // tails[len-1] = largest possible last value of a decreasing run of length len
  std::vector<Letter> tails;
  tails.reserve(w.size());
  for (Letter v : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v, std::greater<>{});
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

std::vector<Pattern> avoiding_123_and_321(int m) {
  if (m < 1 || m > 10) {
    throw DomainError("filter size must lie in [1, 10]");
  }
  const Pattern increasing{1, 2, 3};
  const Pattern decreasing{3, 2, 1};
  std::vector<Letter> values(static_cast<std::size_t>(m));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Pattern> out;
  do {
    if (avoids(values, increasing) && avoids(values, decreasing)) {
      out.emplace_back(Permutation(values));
    }
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

} // namespace cyclicperm
