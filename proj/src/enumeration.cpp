#include "cyclicperm/enumeration.hpp"

#include "cyclicperm/errors.hpp"
#include "cyclicperm/patterns.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace cyclicperm {

std::string_view to_string(Delta4Case c) {
  switch (c) {
  case Delta4Case::i: return "i";
  case Delta4Case::ii: return "ii";
  case Delta4Case::iii: return "iii";
  case Delta4Case::iv: return "iv";
  case Delta4Case::j_eq_n_minus_1: return "n-1";
  case Delta4Case::j_eq_n: return "n";
  }
  return "?";
}

std::optional<Delta4Case> parse_delta4_case(std::string_view text) {
  for (auto c : {Delta4Case::i, Delta4Case::ii, Delta4Case::iii, Delta4Case::iv,
                 Delta4Case::j_eq_n_minus_1, Delta4Case::j_eq_n}) {
    if (text == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

std::uint64_t CountReport::case_total(Delta4Case c) const {
  std::uint64_t sum = 0;
  if (delta4_cases) {
    for (const auto& [key, count] : *delta4_cases) {
      if (key.second == c) {
        sum += count;
      }
    }
  }
  return sum;
}

std::uint64_t CountReport::case_count(int j, Delta4Case c) const {
  if (!delta4_cases) {
    return 0;
  }
  auto it = delta4_cases->find({j, c});
  return it == delta4_cases->end() ? 0 : it->second;
}

namespace {

using Letters = std::span<const Letter>;

// Caller guarantees the member preconditions except the shape itself.
std::optional<Delta4Case> classify_shape(Letters c) {
  const int n = static_cast<int>(c.size());
  const Letter j = c[1];
  if (j == n) {
    return Delta4Case::j_eq_n;
  }
  if (j == n - 1) {
    return Delta4Case::j_eq_n_minus_1;
  }
  const auto pos = [&](Letter x) {
    return static_cast<int>(std::find(c.begin(), c.end(), x) - c.begin());
  };
  if (pos(2) > pos(n)) {
    return Delta4Case::iii;
  }
  const Letter last = c[static_cast<std::size_t>(n - 1)];
  if (last == j - 1) {
    return Delta4Case::iv;
  }
  if (last == n) {
    return c[static_cast<std::size_t>(n - 2)] == n - 1 ? Delta4Case::ii : Delta4Case::i;
  }
  return std::nullopt;
}

bool wants_cases(const ClassQuery& q) {
  return q.k == 4 && q.tau == pattern_1432() && q.n >= 6;
}

CountReport empty_report(const ClassQuery& q) {
  CountReport r;
  r.n = q.n;
  r.k = q.k;
  r.tau = q.tau;
  for (int j = 2; j <= q.n; ++j) {
    r.per_j[j] = 0;
  }
  if (wants_cases(q)) {
    r.delta4_cases.emplace();
  }
  return r;
}

void merge_into(CountReport& into, const CountReport& part) {
  into.total += part.total;
  for (const auto& [j, count] : part.per_j) {
    into.per_j[j] += count;
  }
  if (into.delta4_cases && part.delta4_cases) {
    for (const auto& [key, count] : *part.delta4_cases) {
      (*into.delta4_cases)[key] += count;
    }
  }
}

class Search {
public:
  Search(const ClassQuery& q, EnumerationOptions opts, CountReport& report,
         std::vector<CycleForm>* members)
      : q_(q), opts_(opts), report_(report), members_(members),
        is_1432_(q.tau == pattern_1432()), classify_(wants_cases(q)) {
    letters_[0] = 1;
  }

  // Runs the subtree below a fixed prefix (starting with 1).
  void run(Letters prefix) {
    used_ = 1u << 1;
    for (std::size_t i = 1; i < prefix.size(); ++i) {
      letters_[i] = prefix[i];
      used_ |= 1u << prefix[i];
    }
    if (opts_.prune && dead(static_cast<int>(prefix.size()))) {
      return;
    }
    descend(static_cast<int>(prefix.size()));
  }

private:
  bool dead(int length) const {
    if (length < 3) {
      return false;
    }
    const Letters prefix(letters_.data(), static_cast<std::size_t>(length));
    if (is_1432_) {
      return !avoids_321_and_2143(prefix);
    }
    return contains(prefix, q_.tau);
  }

  void descend(int depth) {
    if (depth == q_.n) {
      leaf();
      return;
    }
    for (Letter x = 2; x <= q_.n; ++x) {
      if (used_ & (1u << x)) {
        continue;
      }
      letters_[static_cast<std::size_t>(depth)] = x;
      if (opts_.prune && dead(depth + 1)) {
        continue;
      }
      used_ |= 1u << x;
      descend(depth + 1);
      used_ &= ~(1u << x);
    }
  }

  void leaf() {
    const auto n = static_cast<std::size_t>(q_.n);
    const Letters cycle(letters_.data(), n);
    if (q_.k) {
      std::array<Letter, kMaxSize> image{};
      for (std::size_t i = 0; i < n; ++i) {
        image[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % n];
      }
      if (lds_length(Letters(image.data(), n)) >= *q_.k) {
        return;
      }
    }
    if (!all_rotations_avoid(cycle, q_.tau)) {
      return;
    }
    const Letter j = cycle[1];
    ++report_.total;
    ++report_.per_j[j];
    if (classify_ && j >= 4) {
      auto c = classify_shape(cycle);
      if (!c) {
        throw DomainError("delta_4 member " +
                          to_string(std::span<const Letter>(cycle)) +
                          " matches no case shape");
      }
      ++(*report_.delta4_cases)[{j, *c}];
    }
    if (members_) {
      members_->emplace_back(std::vector<Letter>(cycle.begin(), cycle.end()));
    }
  }

  const ClassQuery& q_;
  EnumerationOptions opts_;
  CountReport& report_;
  std::vector<CycleForm>* members_;
  bool is_1432_;
  bool classify_;
  std::array<Letter, kMaxSize> letters_{};
  std::uint32_t used_ = 0;
};

void check_limits(const ClassQuery& q) {
  if (q.n < 2) {
    throw DomainError("exhaustive count needs n >= 2");
  }
  if (q.n > kMaxEnumerationSize) {
    throw LimitExceeded("exhaustive count limited to n <= " +
                        std::to_string(kMaxEnumerationSize));
  }
}

std::vector<std::vector<Letter>> prefix_units(int n) {
  std::vector<std::vector<Letter>> units;
  if (n < 3) {
    units.push_back({1});
    return units;
  }
  for (Letter a = 2; a <= n; ++a) {
    for (Letter b = 2; b <= n; ++b) {
      if (a != b) {
        units.push_back({1, a, b});
      }
    }
  }
  return units;
}

} // namespace

CountReport count_brute(const ClassQuery& q, EnumerationOptions opts) {
  check_limits(q);
  CountReport report = empty_report(q);
  const std::array<Letter, 1> root{1};
  Search(q, opts, report, nullptr).run(root);
  return report;
}

CountReport count_brute_partitioned(const ClassQuery& q, unsigned parts,
                                    EnumerationOptions opts) {
  check_limits(q);
  if (parts == 0) {
    throw DomainError("parts must be positive");
  }
  const auto units = prefix_units(q.n);
  std::vector<CountReport> partial(units.size(), empty_report(q));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t u = next++; u < units.size(); u = next++) {
      try {
        Search(q, opts, partial[u], nullptr).run(units[u]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };

  const auto width = std::min<std::size_t>(parts, units.size());
  {
    std::vector<std::jthread> pool;
    pool.reserve(width);
    for (std::size_t t = 0; t < width; ++t) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  CountReport report = empty_report(q);
  for (const auto& part : partial) {
    merge_into(report, part);
  }
  return report;
}

Delta4Case classify_delta4(const CycleForm& cf) {
  const int n = cf.size();
  if (n < 6 || cf.second() < 4) {
    throw DomainError("delta_4 classifier needs n >= 6 and c_2 >= 4");
  }
  if (!is_member(cf, ClassQuery::make(n, 4))) {
    throw DomainError(to_string(cf) + " is not a delta_4 member");
  }
  auto c = classify_shape(cf.letters());
  if (!c) {
    throw DomainError(to_string(cf) + " matches no case shape");
  }
  return *c;
}

std::vector<CycleForm> list_members(const ClassQuery& q, std::optional<int> j) {
  check_limits(q);
  CountReport scratch = empty_report(q);
  std::vector<CycleForm> members;
  if (j) {
    if (*j < 2 || *j > q.n) {
      return members;
    }
    const std::array<Letter, 2> root{1, *j};
    Search(q, {}, scratch, &members).run(root);
  } else {
    const std::array<Letter, 1> root{1};
    Search(q, {}, scratch, &members).run(root);
  }
  return members;
}

void for_each_cycle_form(int n, const std::function<void(const CycleForm&)>& visit) {
  if (n < 1 || n > kMaxSize) {
    throw DomainError("cycle size out of range");
  }
  std::vector<Letter> letters(static_cast<std::size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  do {
    visit(CycleForm(letters));
  } while (std::next_permutation(letters.begin() + 1, letters.end()));
}

} // namespace cyclicperm
