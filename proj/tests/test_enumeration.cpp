#include "cyclicperm/enumeration.hpp"
#include "cyclicperm/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace cyclicperm;

namespace {

using PerJ = std::map<int, std::uint64_t>;

std::uint64_t sum_per_j(const CountReport& r) {
  std::uint64_t s = 0;
  for (const auto& [j, c] : r.per_j) s += c;
  return s;
}

} // namespace

TEST_CASE("count_brute spot values") {
  CHECK(count_brute(ClassQuery::make(5, 4)).total == 11);
  CHECK(count_brute(ClassQuery::make(5, 3)).total == 6);
  CHECK(count_brute(ClassQuery::make(2, 3)).total == 1);
  CHECK_THROWS_AS(count_brute(ClassQuery::make(13, 3)), LimitExceeded);
  CHECK_THROWS_AS(count_brute(ClassQuery::make(1, 3)), DomainError);
}

// Frozen from an exhaustive walk over one-line space (separate script,
// same numbers reproduced by oracle::members below for n <= 7).
TEST_CASE("per-j tables") {
  CHECK(count_brute(ClassQuery::make(6, 3)).per_j == PerJ{{2, 6}, {3, 2}, {4, 1}, {5, 0}, {6, 0}});
  CHECK(count_brute(ClassQuery::make(8, 3)).per_j ==
        PerJ{{2, 14}, {3, 3}, {4, 1}, {5, 1}, {6, 0}, {7, 0}, {8, 0}});
  CHECK(count_brute(ClassQuery::make(7, 4)).per_j ==
        PerJ{{2, 26}, {3, 10}, {4, 8}, {5, 7}, {6, 4}, {7, 1}});
  CHECK(count_brute(ClassQuery::make(8, 5)).per_j ==
        PerJ{{2, 80}, {3, 32}, {4, 26}, {5, 24}, {6, 16}, {7, 6}, {8, 1}});
  CHECK(count_brute(ClassQuery::make(4, 3)).per_j == PerJ{{2, 2}, {3, 1}, {4, 0}});
}

TEST_CASE("oracle agreement and pruning transparency for n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (std::optional<int> k : {std::optional<int>(3), std::optional<int>(4),
                                 std::optional<int>(5), std::optional<int>()}) {
      const auto q = ClassQuery::make(n, k);
      const auto pruned = count_brute(q);
      const auto plain = count_brute(q, {.prune = false});
      CHECK(pruned == plain);
      CHECK(pruned.total == oracle::members(n, k).size());
    }
  }
}

TEST_CASE("generic tau counts") {
  const auto q = ClassQuery::make(5, 3, Pattern{1, 3, 4, 2});
  const auto r = count_brute(q);
  CHECK(r.total == 4);
  CHECK(r == count_brute(q, {.prune = false}));
  CHECK(r.total == oracle::members(5, 3, {1, 3, 4, 2}).size());
  CHECK_FALSE(r.delta4_cases.has_value());
}

TEST_CASE("count_brute_partitioned") {
  const auto q7 = ClassQuery::make(7, 3);
  CHECK(count_brute_partitioned(q7, 1) == count_brute_partitioned(q7, 6));
  CHECK(count_brute_partitioned(q7, 3) == count_brute(q7));

  for (unsigned parts : {1u, 2u, 5u}) {
    CHECK(count_brute_partitioned(ClassQuery::make(5, 5), parts).total == 13);
  }

  const auto r = count_brute_partitioned(ClassQuery::make(6, 4), 4);
  CHECK(r.total == 26);
  CHECK(r.per_j.at(2) == 11);
  CHECK(r.per_j.at(3) == 6);
  CHECK(r.per_j.at(4) + r.per_j.at(5) + r.per_j.at(6) == 9);

  CHECK(count_brute_partitioned(ClassQuery::make(2, 3), 8).total == 1);
  CHECK_THROWS_AS(count_brute_partitioned(q7, 0), DomainError);
}

TEST_CASE("total equals sum of refined counts") {
  for (int n = 2; n <= 9; ++n) {
    for (int k : {3, 4, 5}) {
      const auto r = count_brute(ClassQuery::make(n, k));
      CHECK(r.total == sum_per_j(r));
      CHECK(r.per_j.size() == static_cast<std::size_t>(n - 1));
      CHECK(r.per_j.begin()->first == 2);
    }
  }
}

TEST_CASE("counts do not depend on k once k >= 5") {
  for (int n = 5; n <= 9; ++n) {
    const auto k5 = count_brute(ClassQuery::make(n, 5));
    const auto k6 = count_brute(ClassQuery::make(n, 6));
    const auto free = count_brute(ClassQuery::make(n, std::nullopt));
    CHECK(k5.total == k6.total);
    CHECK(k5.total == free.total);
    CHECK(k5.per_j == free.per_j);
  }
}

TEST_CASE("classify_delta4") {
  CHECK(classify_delta4(CycleForm{1, 6, 7, 8, 2, 3, 4, 5}) == Delta4Case::iii);
  CHECK(classify_delta4(CycleForm{1, 8, 2, 3, 4, 5, 6, 7}) == Delta4Case::j_eq_n);
  CHECK(classify_delta4(CycleForm{1, 5, 2, 6, 3, 7, 4, 8}) == Delta4Case::i);
  CHECK(classify_delta4(CycleForm{1, 4, 2, 5, 3, 6, 7}) == Delta4Case::ii);
  CHECK(classify_delta4(CycleForm{1, 4, 2, 5, 6, 3}) == Delta4Case::iv);
  CHECK(classify_delta4(CycleForm{1, 6, 2, 3, 4, 7, 5}) == Delta4Case::j_eq_n_minus_1);
  // (1, n-1, 2, ..., n-2, n) is the one j = n-1 shape that contains 4321
  CHECK_THROWS_AS(classify_delta4(CycleForm{1, 7, 2, 3, 4, 5, 6, 8}), DomainError);
  CHECK_THROWS_AS(classify_delta4(CycleForm{1, 3, 2, 4, 5, 6}), DomainError);
  CHECK_THROWS_AS(classify_delta4(CycleForm{1, 4, 2, 5, 3}), DomainError);
}

TEST_CASE("case breakdown is attached only where it applies") {
  const auto r = count_brute(ClassQuery::make(8, 4));
  REQUIRE(r.delta4_cases.has_value());
  std::map<int, std::uint64_t> by_j;
  for (const auto& [key, c] : *r.delta4_cases) by_j[key.first] += c;
  for (int j = 4; j <= 8; ++j) {
    CHECK(by_j[j] == r.per_j.at(j));
  }
  CHECK(r.case_total(Delta4Case::j_eq_n) == 1);
  CHECK(r.case_total(Delta4Case::j_eq_n_minus_1) == 5);
  CHECK_FALSE(count_brute(ClassQuery::make(5, 4)).delta4_cases.has_value());
  CHECK_FALSE(count_brute(ClassQuery::make(8, 3)).delta4_cases.has_value());
}

TEST_CASE("list_members") {
  const auto all = list_members(ClassQuery::make(6, 3));
  CHECK(all.size() == 9);
  CHECK(std::is_sorted(all.begin(), all.end()));
  const auto j3 = list_members(ClassQuery::make(6, 3), 3);
  CHECK(j3 == std::vector<CycleForm>{CycleForm{1, 3, 4, 5, 6, 2}, CycleForm{1, 3, 5, 6, 2, 4}});
  CHECK(list_members(ClassQuery::make(6, 3), 9).empty());
}

TEST_CASE("delta4 case tags round trip through text") {
  for (auto c : {Delta4Case::i, Delta4Case::ii, Delta4Case::iii, Delta4Case::iv,
                 Delta4Case::j_eq_n_minus_1, Delta4Case::j_eq_n}) {
    CHECK(parse_delta4_case(to_string(c)) == c);
  }
  CHECK_FALSE(parse_delta4_case("v").has_value());
}
