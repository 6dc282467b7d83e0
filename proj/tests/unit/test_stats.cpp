#include <doctest.h>

#include <cmath>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/stats.hpp"

using namespace hassedeg;

TEST_CASE("exact rationals") {
  CHECK(ExactRational(6, 8).to_string() == "3/4");
  CHECK(ExactRational(4, 2).to_string() == "2");
  CHECK(ExactRational(1, -2).to_string() == "-1/2");
  CHECK(ExactRational::parse("10/4") == ExactRational(5, 2));
  CHECK(ExactRational::parse("-7") == ExactRational(-7));
  CHECK_THROWS(ExactRational::parse("1/0"));
  CHECK_THROWS(ExactRational::parse("abc"));
  CHECK_THROWS(ExactRational(1, 0));
  CHECK_THROWS(ExactRational(1) / ExactRational(0));
  CHECK(ExactRational(1, 3) + ExactRational(1, 6) == ExactRational(1, 2));
  CHECK(ExactRational(1, 3) < ExactRational(1, 2));
  CHECK(ExactRational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == ExactRational(0));
  CHECK(harmonic(5).to_string() == "137/60");
  CHECK(harmonic(9).to_string() == "7129/2520");
  CHECK_THROWS(harmonic(-1));
}

TEST_CASE("expected down degree, oracle values") {
  const char* means[] = {"1/2", "4/3", "29/12", "37/10", "103/20", "236/35"};
  for (int n = 2; n <= 7; ++n) {
    CHECK(expected_down_degree(n).to_string() == means[n - 2]);
    CHECK(distribution(n, Statistic::down(), 1).mean() == expected_down_degree(n));
  }
  CHECK(expected_down_degree(1) == ExactRational(0));
  CHECK(expected_down_degree(9).to_string() == "2593/252");
  CHECK(expected_down_degree(50).to_string() ==
        "7866679725761316320759/60765578514627386400");
  CHECK(expected_down_degree(50).to_double() == doctest::Approx(129.4594722548007).epsilon(1e-13));
}

TEST_CASE("triple sum equals the closed form") {
  CHECK(triple_sum_expectation(1) == ExactRational(0));
  CHECK(triple_sum_expectation(2).to_string() == "1/2");
  const auto prefixes = triple_sum_prefixes(60);
  REQUIRE(prefixes.size() == 60);
  for (int n = 1; n <= 60; ++n) CHECK(prefixes[n - 1] == expected_down_degree(n));
}

TEST_CASE("histograms over S_3") {
  const auto down = distribution(3, Statistic::down(), 1);
  CHECK(down.counts == std::map<std::int64_t, std::uint64_t>{{0, 1}, {1, 2}, {2, 3}});
  const auto total = distribution(3, Statistic::total(), 1);
  CHECK(total.counts == std::map<std::int64_t, std::uint64_t>{{2, 2}, {3, 4}});
  CHECK(total.total() == 6);
  CHECK(distribution(7, Statistic::up(), 1).counts == distribution(7, Statistic::down(), 3).counts);
  CHECK_THROWS(distribution(10, Statistic::down()));
}

TEST_CASE("left-to-right maxima generating polynomial") {
  CHECK(ltrm_generating_coefficients(0) == std::vector<std::uint64_t>{1});
  CHECK(ltrm_generating_coefficients(3) == std::vector<std::uint64_t>{0, 2, 3, 1});
  std::vector<std::uint64_t> counted(6, 0);
  for_each_permutation(5, [&](const Permutation& p) { ++counted[ltr_maxima(p)]; });
  CHECK(ltrm_generating_coefficients(5) == counted);
  CHECK(expected_ltrm(5) == harmonic(5));
}

TEST_CASE("down degree increments by left-to-right maxima") {
  for_each_permutation(6, [](const Permutation& p) { REQUIRE(check_ltrm_increment(p)); });
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(check_ltrm_increment(random_permutation(60, s)));
  CHECK(down_degree(Word{7, 3, 9}) == down_degree(Permutation{2, 1, 3}));
}

TEST_CASE("Monte Carlo mean is reproducible and near the exact value") {
  const auto a = monte_carlo_mean(20, Statistic::down(), 20000, 5, 1);
  const auto b = monte_carlo_mean(20, Statistic::down(), 20000, 5, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.samples == 20000);
  const double exact = expected_down_degree(20).to_double();
  CHECK(std::abs(a.mean - exact) <= 4 * a.standard_error);
  CHECK(monte_carlo_mean(20, Statistic::down(), 20000, 6, 1).mean != a.mean);
  CHECK_THROWS(monte_carlo_mean(5, Statistic::down(), 1, 1));
}
