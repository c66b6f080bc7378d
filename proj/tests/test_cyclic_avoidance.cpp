#include "cyclicperm/cyclic_avoidance.hpp"
#include "cyclicperm/enumeration.hpp"
#include "cyclicperm/equivalence.hpp"
#include "cyclicperm/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace cyclicperm;

TEST_CASE("ClassQuery validation") {
  CHECK_NOTHROW(ClassQuery::make(5, 3));
  CHECK_NOTHROW(ClassQuery::make(5, std::nullopt));
  CHECK_THROWS_AS(ClassQuery::make(5, 2), DomainError);
  CHECK_THROWS_AS(ClassQuery::make(0, 3), DomainError);
  CHECK_THROWS_AS(ClassQuery::make(5, 3, Pattern{1, 3, 2}), DomainError);
}

TEST_CASE("all_rotations_avoid") {
  CHECK(all_rotations_avoid(CycleForm{1, 4, 2, 3}, pattern_1432()));
  CHECK_FALSE(all_rotations_avoid(CycleForm{1, 4, 3, 2}, pattern_1432()));
  CHECK(all_rotations_avoid(CycleForm{1}, pattern_1432()));
  CHECK(oracle::member({1, 4, 2, 3}, std::nullopt));
  CHECK_FALSE(oracle::member({1, 4, 3, 2}, std::nullopt));
}

TEST_CASE("avoids_321_and_2143") {
  CHECK(avoids_321_and_2143(CycleForm{1, 3, 2, 4}));
  CHECK_FALSE(avoids_321_and_2143(CycleForm{1, 3, 2, 5, 4}));
  CHECK(avoids_321_and_2143(CycleForm{1, 2, 3, 4, 5}));
}

TEST_CASE("c2_structure_holds") {
  CHECK(c2_structure_holds(CycleForm{1, 4, 2, 5, 3}));
  CHECK_FALSE(c2_structure_holds(CycleForm{1, 3, 5, 4, 2}));
  CHECK(c2_structure_holds(CycleForm{1, 3, 2, 4, 5}));
  CHECK_THROWS_AS(c2_structure_holds(CycleForm{1, 3, 2, 4}), DomainError);
  CHECK_THROWS_AS(c2_structure_holds(CycleForm{1, 2, 3, 4, 5}), DomainError);
}

TEST_CASE("is_member") {
  CHECK_FALSE(is_member(CycleForm{1, 3, 2, 4}, ClassQuery::make(4, 3)));
  CHECK(is_member(CycleForm{1, 2, 3, 4, 5}, ClassQuery::make(5, 3)));
  CHECK(is_member(CycleForm{1}, ClassQuery::make(1, 3)));
  CHECK_THROWS_AS(is_member(CycleForm{1, 2}, ClassQuery::make(3, 3)), DomainError);
}

TEST_CASE("membership agrees with the independent oracle for n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (std::optional<int> k : {std::optional<int>(3), std::optional<int>(4),
                                 std::optional<int>(5), std::optional<int>()}) {
      const auto q = ClassQuery::make(n, k);
      for_each_cycle_form(n, [&](const CycleForm& cf) {
        const std::vector<int> c(cf.letters().begin(), cf.letters().end());
        REQUIRE(is_member(cf, q) == oracle::member(c, k));
      });
    }
  }
}

TEST_CASE("rotation avoidance of 1432 is equivalent to avoiding 321 and 2143, n <= 8") {
  const auto r = run_equivalence(EquivalenceCheck::rotations_vs_321_2143, 8);
  CHECK(r.ok());
  CHECK(r.forms_checked == 1 + 1 + 2 + 6 + 24 + 120 + 720 + 5040);
}

TEST_CASE("structure predicate is equivalent for c_2 >= 3, 5 <= n <= 8") {
  const auto r = run_equivalence(EquivalenceCheck::c2_structure, 8);
  CHECK(r.ok());
  CHECK(r.forms_checked > 0);
}

TEST_CASE("delta_5 is redundant for 5 <= n <= 9") {
  const auto r = run_equivalence(EquivalenceCheck::delta5_redundant, 9);
  CHECK(r.ok());
}

TEST_CASE("is_member with no k matches the 321/2143 filter for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto q = ClassQuery::make(n, std::nullopt);
    for_each_cycle_form(n, [&](const CycleForm& cf) {
      REQUIRE(is_member(cf, q) == avoids_321_and_2143(cf));
    });
  }
}

TEST_CASE("run_equivalence range checks") {
  CHECK_THROWS_AS(run_equivalence(EquivalenceCheck::c2_structure, 4), DomainError);
  CHECK_THROWS_AS(run_equivalence(EquivalenceCheck::rotations_vs_321_2143, 12), DomainError);
  CHECK(parse_equivalence_check("delta5") == EquivalenceCheck::delta5_redundant);
  CHECK(parse_equivalence_check("lemma41") == EquivalenceCheck::delta5_redundant);
  CHECK(parse_equivalence_check("c2-structure") == EquivalenceCheck::c2_structure);
  CHECK_FALSE(parse_equivalence_check("nope").has_value());
}
