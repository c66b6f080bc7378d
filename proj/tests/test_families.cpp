#include "cyclicperm/enumeration.hpp"
#include "cyclicperm/errors.hpp"
#include "cyclicperm/families.hpp"
#include "cyclicperm/formulas.hpp"

#include <doctest.h>

#include <set>

using namespace cyclicperm;

namespace {

std::set<CycleForm> as_set(const std::vector<CycleForm>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("contract_leading_two and expand_leading_two") {
  CHECK(contract_leading_two(CycleForm{1, 2, 4, 3, 5}) == CycleForm{1, 3, 2, 4});
  CHECK(contract_leading_two(CycleForm{1, 2, 3}) == CycleForm{1, 2});
  CHECK_THROWS_AS(contract_leading_two(CycleForm{1, 3, 2}), DomainError);
  CHECK(expand_leading_two(CycleForm{1, 3, 2, 4}) == CycleForm{1, 2, 4, 3, 5});
  CHECK(expand_leading_two(CycleForm{1, 2}) == CycleForm{1, 2, 3});
  CHECK_THROWS_AS(expand_leading_two(CycleForm{1}), DomainError);
}

TEST_CASE("leading-two maps are mutually inverse for sizes up to 8") {
  for (int n = 2; n <= 7; ++n) {
    for_each_cycle_form(n, [](const CycleForm& cf) {
      const auto up = expand_leading_two(cf);
      REQUIRE(up.second() == 2);
      REQUIRE(contract_leading_two(up) == cf);
    });
  }
}

TEST_CASE("leading-two contraction image against the oracle") {
  for (int n = 6; n <= 8; ++n) {
    for (int k : {3, 4, 5}) {
      const auto big = list_members(ClassQuery::make(n, k), 2);
      std::set<CycleForm> image;
      for (const auto& cf : big) image.insert(contract_leading_two(cf));
      CHECK(image.size() == big.size());
      CHECK(image == as_set(list_members(ClassQuery::make(n - 1, k))));
    }
  }
}

TEST_CASE("drop_trailing_max and append_max") {
  CHECK(drop_trailing_max(CycleForm{1, 3, 2, 4, 5}) == CycleForm{1, 3, 2, 4});
  CHECK(drop_trailing_max(CycleForm{1, 2, 3, 4}) == CycleForm{1, 2, 3});
  CHECK_THROWS_AS(drop_trailing_max(CycleForm{1, 4, 2, 3}), DomainError);
  CHECK(append_max(CycleForm{1, 3, 2, 4}) == CycleForm{1, 3, 2, 4, 5});
}

TEST_CASE("deleting a trailing (n-1, n) pair's n is a bijection onto shapes ending in n-1") {
  for (int n = 6; n <= 9; ++n) {
    const auto big = list_members(ClassQuery::make(n, 4));
    const auto small = list_members(ClassQuery::make(n - 1, 4));
    for (int j = 3; j <= n - 2; ++j) {
      std::set<CycleForm> image;
      std::size_t sources = 0;
      for (const auto& cf : big) {
        if (has_trailing_max_shape(cf, j) && cf.letters()[n - 2] == n - 1) {
          ++sources;
          const auto down = drop_trailing_max(cf);
          CHECK(append_max(down) == cf);
          image.insert(down);
        }
      }
      std::set<CycleForm> target;
      for (const auto& cf : small) {
        if (has_trailing_max_shape(cf, j)) target.insert(cf);
      }
      CHECK(image.size() == sources);
      CHECK(image == target);
    }
  }
}

TEST_CASE("trailing-pair counts against the oracle") {
  for (int n = 6; n <= 10; ++n) {
    std::uint64_t j3 = 0, tail = 0;
    for (const auto& cf : list_members(ClassQuery::make(n, 4))) {
      const auto c = cf.letters();
      if (c[n - 2] != n - 1 || c[n - 1] != n) continue;
      if (cf.second() == 3) ++j3;
      const int j = cf.second();
      if (j >= 4 && j <= n - 2 && classify_delta4(cf) == Delta4Case::ii) ++tail;
    }
    CHECK(j3 == j3_trailing_pair_count(n));
    CHECK(tail == tail_trailing_pair_count(n));
  }
}

TEST_CASE("gen_delta3_j3") {
  CHECK(gen_delta3_j3(6) ==
        std::vector<CycleForm>{CycleForm{1, 3, 4, 5, 6, 2}, CycleForm{1, 3, 5, 6, 2, 4}});
  const auto seven = gen_delta3_j3(7);
  CHECK(seven.size() == 3);
  CHECK(seven.back() == CycleForm{1, 3, 5, 7, 2, 4, 6});
  CHECK(gen_delta3_j3(5) ==
        std::vector<CycleForm>{CycleForm{1, 3, 4, 5, 2}, CycleForm{1, 3, 5, 2, 4}});
  CHECK_THROWS_AS(gen_delta3_j3(4), DomainError);
}

TEST_CASE("gen_delta3_unique") {
  CHECK(gen_delta3_unique(7, 4) == CycleForm{1, 4, 2, 5, 6, 7, 3});
  CHECK(gen_delta3_unique(7, 5) == CycleForm{1, 5, 2, 6, 3, 7, 4});
  CHECK_THROWS_AS(gen_delta3_unique(7, 6), DomainError);
  CHECK_THROWS_AS(gen_delta3_unique(7, 3), DomainError);
}

TEST_CASE("gen_delta4_case3") {
  CHECK(gen_delta4_case3(8, 6, {7}) == CycleForm{1, 6, 7, 8, 2, 3, 4, 5});
  CHECK(gen_delta4_case3(8, 6, {}) == CycleForm{1, 6, 8, 2, 3, 4, 5, 7});
  CHECK(gen_delta4_case3(8, 4, {5, 6, 7}) == CycleForm{1, 4, 5, 6, 7, 8, 2, 3});
  CHECK(classify_delta4(gen_delta4_case3(8, 4, {5, 6, 7})) == Delta4Case::iii);
  CHECK_THROWS_AS(gen_delta4_case3(8, 6, {6}), DomainError);
  CHECK_THROWS_AS(gen_delta4_case3(8, 3, {}), DomainError);
  CHECK_THROWS_AS(gen_delta4_case3(5, 4, {}), DomainError);
  const auto all = gen_delta4_case3_all(8, 5);
  CHECK(all.size() == 4);
  CHECK(as_set(all).size() == 4);
}

TEST_CASE("gen_delta4_case1") {
  CHECK(gen_delta4_case1(8) == CycleForm{1, 5, 2, 6, 3, 7, 4, 8});
  CHECK_FALSE(gen_delta4_case1(7).has_value());
  CHECK(gen_delta4_case1(6) == CycleForm{1, 4, 2, 5, 3, 6});
  // one-line reads j (j+1) ... n 2 3 ... (j-1) 1
  CHECK(to_one_line(*gen_delta4_case1(8)) == Permutation{5, 6, 7, 8, 2, 3, 4, 1});
}

TEST_CASE("family completeness against the oracle, 5 <= n <= 9") {
  for (int n = 5; n <= 9; ++n) {
    const auto q = ClassQuery::make(n, 3);
    CHECK(as_set(gen_delta3_j3(n)) == as_set(list_members(q, 3)));
    for (int j = 4; j <= n; ++j) {
      const auto oracle = list_members(q, j);
      if (2 * j - 3 <= n) {
        CHECK(oracle == std::vector<CycleForm>{gen_delta3_unique(n, j)});
      } else {
        CHECK(oracle.empty());
      }
    }
  }
  for (int n = 7; n <= 9; ++n) {
    const auto members = list_members(ClassQuery::make(n, 4));
    for (int j = 4; j <= n - 2; ++j) {
      std::set<CycleForm> oracle;
      for (const auto& cf : members) {
        if (cf.second() == j && classify_delta4(cf) == Delta4Case::iii) oracle.insert(cf);
      }
      CHECK(as_set(gen_delta4_case3_all(n, j)) == oracle);
    }
  }
}

TEST_CASE("chain covers written for the families are valid") {
  for (int n = 5; n <= 12; ++n) {
    for (int j = 4; 2 * j - 3 <= n; ++j) {
      const auto p = to_one_line(gen_delta3_unique(n, j));
      const auto cover = delta3_unique_chain_cover(n, j);
      CHECK(cover.size() == 2);
      CHECK(verify_chain_cover(p, cover));
    }
  }
  for (int n = 6; n <= 11; ++n) {
    for (int j = 4; j <= n - 2; ++j) {
      for (const auto& cf : gen_delta4_case3_all(n, j)) {
        const auto cover = split_at_max_chain_cover(cf);
        CHECK(cover.size() <= 3);
        CHECK(verify_chain_cover(to_one_line(cf), cover));
      }
    }
  }
}

TEST_CASE("three-chain covers on oracle members with j = 3 (case iii) and case iv") {
  for (int n = 6; n <= 9; ++n) {
    for (const auto& cf : list_members(ClassQuery::make(n, 4))) {
      const int j = cf.second();
      const auto p = to_one_line(cf);
      if (j == 3 && cf.position_of(2) == cf.position_of(n) + 1) {
        CHECK(verify_chain_cover(p, split_at_max_chain_cover(cf)));
      }
      if (j >= 4 && j <= n - 2 && classify_delta4(cf) == Delta4Case::iv) {
        const auto cover = case4_chain_cover(cf);
        CHECK(cover.size() <= 3);
        CHECK(verify_chain_cover(p, cover));
      }
    }
  }
}

TEST_CASE("every listed family member is a member") {
  for (int n = 5; n <= 12; ++n) {
    for (const auto& m : families(n, 3)) {
      CHECK(is_member(m.cf, ClassQuery::make(n, 3)));
    }
    if (n >= 6) {
      for (const auto& m : families(n, 4)) {
        CHECK(is_member(m.cf, ClassQuery::make(n, 4)));
      }
    }
  }
  CHECK_THROWS_AS(families(7, 5), DomainError);
  CHECK_THROWS_AS(families(5, 4), DomainError);
  CHECK(families(8, 3).size() == 3 + 2);
}
