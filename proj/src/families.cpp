#include "cyclicperm/families.hpp"

#include "cyclicperm/errors.hpp"

#include <algorithm>

namespace cyclicperm {

CycleForm contract_leading_two(const CycleForm& cf) {
  if (cf.size() < 3 || cf.second() != 2) {
    throw DomainError("forward map needs n >= 3 and c_2 = 2");
  }
  std::vector<Letter> out{1};
  for (int i = 3; i <= cf.size(); ++i) {
    out.push_back(cf.at(i) - 1);
  }
  return CycleForm(std::move(out));
}

CycleForm expand_leading_two(const CycleForm& cf) {
  if (cf.size() < 2) {
    throw DomainError("backward map needs size >= 2");
  }
  if (cf.size() + 1 > kMaxSize) {
    throw DomainError("result would exceed maximum size");
  }
  std::vector<Letter> out{1, 2};
  for (int i = 2; i <= cf.size(); ++i) {
    out.push_back(cf.at(i) + 1);
  }
  return CycleForm(std::move(out));
}

CycleForm drop_trailing_max(const CycleForm& cf) {
  const int n = cf.size();
  if (n < 4 || cf.at(n) != n) {
    throw DomainError("forward map needs n >= 4 and last letter n");
  }
  const auto letters = cf.letters();
  return CycleForm(std::vector<Letter>(letters.begin(), letters.end() - 1));
}

CycleForm append_max(const CycleForm& cf) {
  if (cf.size() + 1 > kMaxSize) {
    throw DomainError("result would exceed maximum size");
  }
  const auto letters = cf.letters();
  std::vector<Letter> out(letters.begin(), letters.end());
  out.push_back(cf.size() + 1);
  return CycleForm(std::move(out));
}

bool has_trailing_max_shape(const CycleForm& cf, int j) {
  const int n = cf.size();
  if (n < 3 || cf.second() != j || cf.at(n) != n) {
    return false;
  }
  Letter expected = 2;
  for (Letter x : cf.letters()) {
    if (x >= 2 && x <= j - 1) {
      if (x != expected) {
        return false;
      }
      ++expected;
    }
  }
  return true;
}

std::vector<CycleForm> gen_delta3_j3(int n) {
  if (n < 5 || n > kMaxSize) {
    throw DomainError("j = 3 family needs 5 <= n <= 20");
  }
  std::vector<CycleForm> out;
  for (int t = 1; t <= (n - 1) / 2; ++t) {
    std::vector<Letter> letters{1};
    for (Letter x = 3; x <= 2 * t + 1; x += 2) {
      letters.push_back(x);
    }
    for (Letter x = 2 * t + 2; x <= n; ++x) {
      letters.push_back(x);
    }
    for (Letter x = 2; x <= 2 * t; x += 2) {
      letters.push_back(x);
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

namespace {

void check_unique_range(int n, int j) {
  if (n < 5 || n > kMaxSize || j < 4 || 2 * j - 3 > n) {
    throw DomainError("unique member needs n >= 5 and 4 <= j <= floor((n+3)/2)");
  }
}

} // namespace

CycleForm gen_delta3_unique(int n, int j) {
  check_unique_range(n, j);
  std::vector<Letter> letters{1, j};
  for (Letter i = 2; i <= j - 2; ++i) {
    letters.push_back(i);
    letters.push_back(j + i - 1);
  }
  for (Letter x = 2 * j - 2; x <= n; ++x) {
    letters.push_back(x);
  }
  letters.push_back(j - 1);
  return CycleForm(std::move(letters));
}

ChainCover delta3_unique_chain_cover(int n, int j) {
  check_unique_range(n, j);
  std::vector<int> first;
  std::vector<int> second;
  for (int x = 1; x <= j - 2; ++x) {
    first.push_back(x);
  }
  for (int x = 2 * j - 3; x <= n - 1; ++x) {
    first.push_back(x);
  }
  for (int x = j - 1; x <= 2 * j - 4; ++x) {
    second.push_back(x);
  }
  second.push_back(n);
  return chain_cover_from_sets({std::move(first), std::move(second)});
}

CycleForm gen_delta4_case3(int n, int j, const std::set<int>& placement) {
  if (n < 6 || n > kMaxSize || j < 4 || j > n - 1) {
    throw DomainError("case (iii) family needs n >= 6 and 4 <= j <= n-1");
  }
  for (int x : placement) {
    if (x <= j || x >= n) {
      throw DomainError("placement letters must lie in [j+1, n-1]");
    }
  }
  std::vector<Letter> letters{1, j};
  letters.insert(letters.end(), placement.begin(), placement.end());
  letters.push_back(n);
  for (Letter x = 2; x <= j - 1; ++x) {
    letters.push_back(x);
  }
  for (Letter x = j + 1; x <= n - 1; ++x) {
    if (!placement.contains(x)) {
      letters.push_back(x);
    }
  }
  return CycleForm(std::move(letters));
}

std::vector<CycleForm> gen_delta4_case3_all(int n, int j) {
  if (n < 6 || n > kMaxSize || j < 4 || j > n - 1) {
    throw DomainError("case (iii) family needs n >= 6 and 4 <= j <= n-1");
  }
  const int free = n - j - 1;
  std::vector<CycleForm> out;
  for (unsigned mask = 0; mask < (1u << free); ++mask) {
    std::set<int> placement;
    for (int b = 0; b < free; ++b) {
      if (mask & (1u << b)) {
        placement.insert(j + 1 + b);
      }
    }
    out.push_back(gen_delta4_case3(n, j, placement));
  }
  return out;
}

std::optional<CycleForm> gen_delta4_case1(int n) {
  if (n < 6 || n > kMaxSize) {
    throw DomainError("case (i) family needs 6 <= n <= 20");
  }
  if (n % 2 != 0) {
    return std::nullopt;
  }
  const int j = (n + 2) / 2;
  std::vector<Letter> letters{1, j};
  for (Letter i = 2; i <= j - 2; ++i) {
    letters.push_back(i);
    letters.push_back(j + i - 1);
  }
  letters.push_back(j - 1);
  letters.push_back(n);
  return CycleForm(std::move(letters));
}

ChainCover split_at_max_chain_cover(const CycleForm& cf) {
  const int n = cf.size();
  const int p = cf.position_of(n);
  if (p >= n - 1 || cf.letters()[static_cast<std::size_t>(p + 1)] != 2) {
    throw DomainError(to_string(cf) + " does not continue n with 2");
  }
  const auto letters = cf.letters();
  std::vector<int> before(letters.begin(), letters.begin() + p);
  std::vector<int> after(letters.begin() + p + 1, letters.end() - 1);
  std::vector<int> pair{letters.back(), n};
  return chain_cover_from_sets({std::move(before), std::move(after), std::move(pair)});
}

ChainCover case4_chain_cover(const CycleForm& cf) {
  const int n = cf.size();
  const int j = cf.second();
  const int p = cf.position_of(n);
  if (p >= n - 1) {
    throw DomainError(to_string(cf) + " ends with n");
  }
  const auto letters = cf.letters();
  const int i = letters[static_cast<std::size_t>(p + 1)] - 1;
  if (i < 2 || i > j - 2 || n - (p + 1) != j - 1 - i) {
    throw DomainError(to_string(cf) + " is not a case (iv) shape");
  }
  for (int t = p + 1; t < n; ++t) {
    if (letters[static_cast<std::size_t>(t)] != i + 1 + (t - p - 1)) {
      throw DomainError(to_string(cf) + " is not a case (iv) shape");
    }
  }
  const Permutation pi = to_one_line(cf);
  std::vector<int> low_chain{1};
  std::vector<int> mid_chain;
  std::vector<int> top_chain{j - 1};
  std::vector<int> v;
  for (int x = 2; x <= i; ++x) {
    (pi(x) < i + 1 ? mid_chain : low_chain).push_back(x);
  }
  for (int x = i + 1; x <= j - 2; ++x) {
    mid_chain.push_back(x);
  }
  for (int x = j; x <= n - 1; ++x) {
    (pi(x) < i + 1 ? top_chain : v).push_back(x);
  }
  mid_chain.insert(mid_chain.end(), v.begin(), v.end());
  top_chain.push_back(n);
  return chain_cover_from_sets({std::move(low_chain), std::move(mid_chain), std::move(top_chain)});
}

std::vector<FamilyMember> families(int n, int k) {
  std::vector<FamilyMember> out;
  if (k == 3) {
    if (n < 5) {
      throw DomainError("k = 3 families need n >= 5");
    }
    int t = 1;
    for (auto& cf : gen_delta3_j3(n)) {
      out.push_back({std::move(cf), "delta3-j3", {t++}, 3});
    }
    for (int j = 4; 2 * j - 3 <= n; ++j) {
      out.push_back({gen_delta3_unique(n, j), "delta3-unique", {j}, 3});
    }
    return out;
  }
  if (k == 4) {
    if (n < 6) {
      throw DomainError("k = 4 families need n >= 6");
    }
    if (auto cf = gen_delta4_case1(n)) {
      out.push_back({std::move(*cf), "delta4-case-i", {(n + 2) / 2}, 4});
    }
    for (int j = 4; j <= n - 2; ++j) {
      int mask = 0;
      for (auto& cf : gen_delta4_case3_all(n, j)) {
        out.push_back({std::move(cf), "delta4-case-iii", {j, mask++}, 4});
      }
    }
    return out;
  }
  throw DomainError("explicit families exist for k = 3 and k = 4 only");
}

} // namespace cyclicperm
