#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hassedeg/extremal.hpp"
#include "hassedeg/permutation.hpp"
#include "hassedeg/rational.hpp"

namespace hassedeg {

ExactRational harmonic(int n);

// (n+1) H_n - 2n
ExactRational expected_down_degree(int n);

// sum_{i=2}^n sum_{j=2}^i sum_{k=2}^j 1/(i (k-1)), summed term by term.
ExactRational triple_sum_expectation(int n);
// triple_sum_expectation(n) for n = 1..max_n, index n-1, in one pass over i.
std::vector<ExactRational> triple_sum_prefixes(int max_n);

// Mean number of left-to-right maxima over S_t, i.e. H_t.
ExactRational expected_ltrm(int t);

// Checks, for every 2 <= i <= n, that the down degree grows from the
// restriction below i to the restriction below i+1 by the number of
// left-to-right maxima in the suffix of the smaller restriction that follows
// the position of i.
bool check_ltrm_increment(const Permutation& p);

// Down degree of a word of distinct letters, after renaming to a permutation.
int down_degree(const Word& w);

struct Histogram {
  int n = 0;
  Statistic stat;
  std::map<std::int64_t, std::uint64_t> counts;

  std::uint64_t total() const;
  // Exact mean over the counted permutations.
  ExactRational mean() const;
};

Histogram distribution(int n, Statistic stat, int jobs = 0, int limit = kDefaultExhaustiveLimit);

// Coefficients of prod_{k=1}^{t} (q + k - 1), index = power of q.
std::vector<std::uint64_t> ltrm_generating_coefficients(int t);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

// Samples are drawn in fixed blocks with seeds derived from `seed`, so the
// estimate depends only on (n, stat, samples, seed) and not on `jobs`.
MonteCarloEstimate monte_carlo_mean(int n, Statistic stat, std::uint64_t samples,
                                    std::uint64_t seed, int jobs = 0);

}  // namespace hassedeg
