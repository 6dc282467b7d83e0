#include <doctest.h>

#include <set>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/reconstruct.hpp"

using namespace hassedeg;

TEST_CASE("worked example is rebuilt from its descent set") {
  const Permutation p{7, 9, 5, 2, 3, 8, 4, 1, 6};
  CHECK(reconstruct(9, strong_descent_set(p)) == p);
}

TEST_CASE("round trip on S_n, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [n](const Permutation& p) {
      REQUIRE(reconstruct(n, strong_descent_set(p)) == p);
    });
  }
}

TEST_CASE("round trip on random permutations of degree 100") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto p = random_permutation(100, s);
    REQUIRE(reconstruct(100, strong_descent_set(p)) == p);
  }
}

TEST_CASE("descent sets are pairwise distinct on S_5") {
  std::set<std::vector<Transposition>> seen;
  for_each_permutation(5, [&](const Permutation& p) {
    REQUIRE(seen.insert(strong_descent_set(p).members()).second);
  });
  CHECK(seen.size() == 120);
}

TEST_CASE("unrealizable sets are rejected") {
  // A triangle is never a strong descent graph.
  CHECK_FALSE(is_realizable(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK_THROWS_AS(reconstruct(3, StrongDescentSet(3, 1, {{1, 2}, {1, 3}, {2, 3}})),
                  ValidationFailure);
  CHECK(is_realizable(3, {}));
  CHECK(reconstruct(3, StrongDescentSet(3, 1, {})) == Permutation::identity(3));
  CHECK_THROWS(reconstruct(4, StrongDescentSet(3, 1, {})));
  CHECK_THROWS(reconstruct(4, StrongDescentSet(4, 2, {})));
}
