#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/extremal.hpp"

namespace hassedeg {

using DescentSetFn = std::function<StrongDescentSet(const Permutation&, int)>;

struct VerifyOptions {
  int max_n = 6;                          // exhaustive checks run for n <= max_n
  std::vector<int> sampled_n = {40, 100}; // random permutations at these degrees
  std::uint64_t samples = 10000;          // random permutations per sampled degree
  std::vector<int> monte_carlo_n = {10, 50};
  std::uint64_t monte_carlo_samples = 100000;
  std::uint64_t seed = 1;
  int jobs = 0;
  int exhaustive_limit = kDefaultExhaustiveLimit;
  // The descent-set routine under test; replaced only for fault injection.
  DescentSetFn descent = [](const Permutation& p, int r) { return strong_descent_set(p, r); };
};

struct CheckResult {
  std::string name;
  std::string claim;
  bool passed = false;
  std::string detail;  // coverage on success, first counterexample on failure
  double millis = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  // One line per check: "PASS  <name>  <claim>  [<detail>]  (<ms> ms)".
  std::string render(bool with_timing = true) const;
};

// Runs every property check; throws std::out_of_range if max_n exceeds the
// exhaustive limit.
VerifyReport run_verification(const VerifyOptions& options);

// Fault injection: treats every inversion as a strong descent, ignoring the
// intermediate-value condition.
StrongDescentSet descent_set_ignoring_intermediates(const Permutation& p, int r);

// Shortest word length over adjacent transpositions, by breadth-first search
// over S_n from the identity. Indexed by lexicographic rank.
std::vector<int> coxeter_lengths_by_bfs(int n);

}  // namespace hassedeg
