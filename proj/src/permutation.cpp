#include "cyclicperm/permutation.hpp"

#include "cyclicperm/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cyclicperm {

bool is_rearrangement(std::span<const Letter> values) noexcept {
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (Letter v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<Letter> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw NotAPermutation("empty sequence");
  }
  if (values_.size() > static_cast<std::size_t>(kMaxSize)) {
    throw NotAPermutation("size " + std::to_string(values_.size()) + " exceeds maximum " +
                          std::to_string(kMaxSize));
  }
  if (!is_rearrangement(values_)) {
    throw NotAPermutation(to_string(values_) + " is not a rearrangement of {1.." +
                          std::to_string(values_.size()) + "}");
  }
}

CycleForm::CycleForm(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw NotAPermutation("empty cycle");
  }
  if (letters_.size() > static_cast<std::size_t>(kMaxSize)) {
    throw NotAPermutation("cycle size exceeds maximum " + std::to_string(kMaxSize));
  }
  if (!is_rearrangement(letters_)) {
    throw NotAPermutation(to_string(letters_) + " is not a rearrangement of {1.." +
                          std::to_string(letters_.size()) + "}");
  }
  if (letters_.front() != 1) {
    throw NotAPermutation("standard cycle form must start with 1");
  }
}

int CycleForm::position_of(Letter x) const {
  auto it = std::find(letters_.begin(), letters_.end(), x);
  if (it == letters_.end()) {
    throw DomainError("letter " + std::to_string(x) + " not in cycle");
  }
  return static_cast<int>(it - letters_.begin());
}

Permutation make_permutation(std::vector<Letter> values) { return Permutation(std::move(values)); }

Permutation to_one_line(const CycleForm& cf) {
  const auto letters = cf.letters();
  const auto n = letters.size();
  std::vector<Letter> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    image[static_cast<std::size_t>(letters[i] - 1)] = letters[(i + 1) % n];
  }
  return Permutation(std::move(image));
}

CycleForm standard_cycle_form(const Permutation& p) {
  const int n = p.size();
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  Letter x = 1;
  do {
    letters.push_back(x);
    x = p(x);
  } while (x != 1);
  if (static_cast<int>(letters.size()) != n) {
    throw NotCyclic(to_string(p) + " is not a single " + std::to_string(n) + "-cycle");
  }
  return CycleForm(std::move(letters), CycleForm::Trusted{});
}

std::vector<std::vector<Letter>> rotations(const CycleForm& cf) {
  const auto letters = cf.letters();
  const auto n = letters.size();
  std::vector<std::vector<Letter>> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Letter> word;
    word.reserve(n);
    word.insert(word.end(), letters.begin() + static_cast<std::ptrdiff_t>(r), letters.end());
    word.insert(word.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r));
    out.push_back(std::move(word));
  }
  return out;
}

bool is_cyclic(const Permutation& p) {
  int orbit = 0;
  Letter x = 1;
  do {
    ++orbit;
    x = p(x);
  } while (x != 1);
  return orbit == p.size();
}

std::string to_string(std::span<const Letter> word) {
  const bool compact =
      std::all_of(word.begin(), word.end(), [](Letter v) { return v >= 0 && v < 10; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) {
      out += ',';
    }
    out += std::to_string(word[i]);
  }
  return out;
}

std::string to_string(const Permutation& p) { return to_string(p.values()); }

std::string to_string(const CycleForm& cf) {
  std::string out = "(";
  const auto letters = cf.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(letters[i]);
  }
  return out + ")";
}

std::vector<Letter> parse_word(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Letter> out;
  if (body.empty()) {
    throw NotAPermutation("empty word");
  }
  if (body.find(',') == std::string::npos) {
    for (char ch : body) {
      if (ch < '0' || ch > '9') {
        throw NotAPermutation("unexpected character in '" + text + "'");
      }
      out.push_back(ch - '0');
    }
    return out;
  }
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    Letter v = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw NotAPermutation("cannot parse '" + item + "' in '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

} // namespace cyclicperm
