#include <doctest.h>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hassedeg/permutation.hpp"
#include "oracle.hpp"

using namespace hassedeg;

TEST_CASE("one-line construction validates its input") {
  CHECK(Permutation::from_one_line({3, 1, 2}).to_string() == "[3,1,2]");
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({}), std::invalid_argument);
  CHECK(Permutation::identity(3) == Permutation{1, 2, 3});
  CHECK(Permutation::longest(4) == Permutation{4, 3, 2, 1});
}

TEST_CASE("inverse and composition") {
  const Permutation p{2, 3, 1};
  CHECK(inverse(p) == Permutation{3, 1, 2});
  CHECK(compose(p, inverse(p)) == Permutation::identity(3));
  CHECK(compose(Permutation{2, 1, 3}, Permutation{1, 3, 2}) == Permutation{2, 3, 1});
  CHECK_THROWS(compose(Permutation{1}, Permutation{2, 1}));
}

TEST_CASE("inversion number") {
  CHECK(inversion_number(Permutation{2, 3, 1}) == 2);
  CHECK(inversion_number(Permutation::identity(5)) == 0);
  CHECK(inversion_number(Permutation::longest(6)) == 15);
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const oracle::Perm v(p.values().begin(), p.values().end());
      REQUIRE(inversion_number(p) == oracle::bubble_length(v));
      REQUIRE(inversion_number_naive(p) == inversion_number(p));
    });
  }
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto p = random_permutation(200, s);
    CHECK(inversion_number(p) == inversion_number_naive(p));
  }
}

TEST_CASE("transposition actions") {
  CHECK(apply_transposition_left(Transposition::of(4, 2), Permutation{3, 4, 1, 2}) ==
        Permutation{3, 2, 1, 4});
  CHECK(apply_transposition_right(Permutation{3, 4, 1, 2}, Transposition::of(1, 2)) ==
        Permutation{4, 3, 1, 2});
  CHECK_THROWS(Transposition::of(2, 2));
  CHECK_THROWS(Transposition::of(0, 2));
  std::ostringstream os;
  os << Transposition::of(5, 3);
  CHECK(os.str() == "t(3,5)");
}

TEST_CASE("words, restrictions and left-to-right maxima") {
  const Permutation p{3, 1, 4, 2};
  CHECK(restrict_below(p, 3) == Word{1, 2});
  CHECK(restrict_below(p, 5) == as_word(p));
  CHECK(suffix(as_word(p), 2) == Word{4, 2});
  CHECK(suffix(as_word(p), 0).empty());
  CHECK(ltr_maxima(p) == 2);
  CHECK(ltr_maxima(Word{}) == 0);
  CHECK(ltr_maxima(Word{9, 2, 10}) == 2);
  CHECK(Word{9, 2, 10}.standardize() == Permutation{2, 1, 3});
  CHECK_THROWS(Word{1, 1});
  CHECK(longest_decreasing_subsequence(Permutation{3, 4, 1, 2}) == 2);
  CHECK(longest_decreasing_subsequence(Permutation::longest(7)) == 7);
  CHECK(longest_decreasing_subsequence(Permutation::identity(7)) == 1);
}

TEST_CASE("reversal and end exchanges") {
  const Permutation p{3, 4, 1, 2};
  CHECK(reverse_positions(p) == Permutation{2, 1, 4, 3});
  CHECK(exchange_end_positions(p) == Permutation{2, 4, 1, 3});
  CHECK(exchange_extreme_values(p) == Permutation{3, 1, 4, 2});
}

TEST_CASE("rank and unrank are inverse bijections") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), std::overflow_error);
  std::uint64_t expected = 0;
  for_each_permutation(6, [&](const Permutation& p) {
    REQUIRE(rank(p) == expected);
    REQUIRE(unrank(6, expected) == p);
    ++expected;
  });
  CHECK(expected == 720);
  CHECK_THROWS(unrank(3, 6));
  CHECK(enumerate(3).front() == Permutation{1, 2, 3});
  CHECK(enumerate(3).back() == Permutation{3, 2, 1});
}

TEST_CASE("rank ranges cover S_n without overlap") {
  std::vector<Permutation> seen;
  for_each_in_rank_range(5, 10, 30, [&](const Permutation& p) { seen.push_back(p); });
  REQUIRE(seen.size() == 20);
  CHECK(seen.front() == unrank(5, 10));
  CHECK(seen.back() == unrank(5, 29));
}

TEST_CASE("random permutations are reproducible and uniform-looking") {
  CHECK(random_permutation(30, 7) == random_permutation(30, 7));
  CHECK(random_permutation(30, 7) != random_permutation(30, 8));
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  std::map<Permutation, int> counts;
  Rng rng(42);
  for (int i = 0; i < 6000; ++i) ++counts[random_permutation(3, rng)];
  CHECK(counts.size() == 6);
  for (const auto& [p, c] : counts) CHECK(std::abs(c - 1000) < 150);
  Rng bounded(3);
  for (int i = 0; i < 1000; ++i) CHECK(bounded.below(7) < 7);
}
