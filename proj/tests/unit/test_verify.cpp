#include <doctest.h>

#include "hassedeg/verify.hpp"
#include "oracle.hpp"

using namespace hassedeg;

namespace {

VerifyOptions small_options() {
  VerifyOptions o;
  o.max_n = 5;
  o.sampled_n = {15};
  o.samples = 100;
  o.monte_carlo_n = {10};
  o.monte_carlo_samples = 5000;
  return o;
}

}  // namespace

TEST_CASE("breadth-first lengths match bubble-sort lengths") {
  const auto lengths = coxeter_lengths_by_bfs(5);
  const auto perms = oracle::all_perms(5);
  REQUIRE(lengths.size() == perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k) CHECK(lengths[k] == oracle::bubble_length(perms[k]));
}

TEST_CASE("every check passes on a small configuration") {
  const auto report = run_verification(small_options());
  CHECK(report.checks.size() == 24);
  for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  CHECK(report.all_passed());
  CHECK(report.render(false).find("24/24 checks passed") != std::string::npos);
}

TEST_CASE("report is independent of the worker count") {
  auto a = small_options();
  a.jobs = 1;
  auto b = small_options();
  b.jobs = 4;
  CHECK(run_verification(a).render(false) == run_verification(b).render(false));
}

TEST_CASE("a broken descent criterion is detected") {
  auto o = small_options();
  o.descent = descent_set_ignoring_intermediates;
  const auto report = run_verification(o);
  CHECK_FALSE(report.all_passed());
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.name == "descent-graph-triangle-free"; });
  REQUIRE(it != report.checks.end());
  CHECK_FALSE(it->passed);
}

TEST_CASE("options beyond the exhaustive limit are rejected") {
  auto o = small_options();
  o.max_n = 10;
  CHECK_THROWS_AS(run_verification(o), std::out_of_range);
}
