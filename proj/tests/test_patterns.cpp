#include "cyclicperm/patterns.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace cyclicperm;

TEST_CASE("contains") {
  const auto p = Pattern::parse("1432");
  CHECK(contains(std::vector<Letter>{1, 4, 3, 2}, p));
  CHECK(contains(std::vector<Letter>{2, 5, 4, 1, 3}, p));
  CHECK_FALSE(contains(std::vector<Letter>{1, 4, 2, 3}, p));
  CHECK(oracle::contains({2, 5, 4, 1, 3}, {1, 4, 3, 2}));
  CHECK_FALSE(oracle::contains({1, 4, 2, 3}, {1, 4, 3, 2}));
}

TEST_CASE("avoids") {
  const Pattern p321{3, 2, 1};
  CHECK(avoids(std::vector<Letter>{1, 2, 3, 4, 5}, p321));
  CHECK_FALSE(avoids(std::vector<Letter>{3, 4, 2, 1}, p321));
  CHECK(avoids(std::vector<Letter>{1}, Pattern{2, 1}));
  CHECK(avoids(std::vector<Letter>{}, Pattern{1}));
}

TEST_CASE("lds_length") {
  CHECK(lds_length(std::vector<Letter>{4, 3, 2, 1}) == 4);
  CHECK(lds_length(std::vector<Letter>{1, 2, 3, 4, 5}) == 1);
  CHECK(lds_length(std::vector<Letter>{2, 4, 1, 5, 3}) == 2);
  CHECK(oracle::lds({2, 4, 1, 5, 3}) == 2);
  CHECK(lds_length(std::vector<Letter>{}) == 0);
}

TEST_CASE("decreasing pattern and parse") {
  CHECK(Pattern::decreasing(4) == Pattern{4, 3, 2, 1});
  CHECK(Pattern::parse("2143").str() == "2143");
  CHECK_THROWS(Pattern::parse("1442"));
}

TEST_CASE("S_m filter for 123 and 321") {
  std::vector<std::string> names;
  for (const auto& p : s4_avoiding_123_and_321()) names.push_back(p.str());
  CHECK(names == std::vector<std::string>{"2143", "2413", "3142", "3412"});
  CHECK(avoiding_123_and_321(5).empty());
  const auto s2 = avoiding_123_and_321(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].str() == "12");
  CHECK(s2[1].str() == "21");
}

TEST_CASE("delta_k containment matches lds for every word up to length 8") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Letter> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      const int l = lds_length(w);
      for (int k = 2; k <= 6; ++k) {
        REQUIRE(contains(w, Pattern::decreasing(k)) == (l >= k));
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("containment is invariant under increasing relabeling") {
  std::mt19937 rng(7);
  const std::vector<Pattern> patterns{Pattern{1, 4, 3, 2}, Pattern{2, 1, 4, 3}, Pattern{3, 2, 1},
                                      Pattern{1, 3, 4, 2}, Pattern{2, 4, 1, 5, 3}};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    auto w = oracle::random_permutation(rng, n);
    // strictly increasing map x -> 3x + x*x
    std::vector<Letter> relabeled;
    for (int x : w) relabeled.push_back(3 * x + x * x);
    for (const auto& p : patterns) {
      CHECK(contains(w, p) == contains(relabeled, p));
    }
  }
}

TEST_CASE("fast lds agrees with exhaustive search on 1000 random words") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 10);
    const auto w = oracle::random_word(rng, n, 40);
    REQUIRE(lds_length(w) == oracle::lds(w));
  }
}

TEST_CASE("generic matcher agrees with exhaustive search on random pairs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto w = oracle::random_word(rng, n, 30);
    const auto sigma = oracle::random_permutation(rng, k);
    REQUIRE(contains(w, Pattern(Permutation(sigma))) == oracle::contains(w, sigma));
  }
}
