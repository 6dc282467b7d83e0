#include "hassedeg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/parallel.hpp"

namespace hassedeg {

namespace {

constexpr std::uint64_t kSampleBlock = 4096;

}  // namespace

ExactRational harmonic(int n) {
  if (n < 0) throw std::invalid_argument("harmonic number of a negative index");
  mpq_class sum = 0;
  for (int i = 1; i <= n; ++i) sum += mpq_class(1, i);
  return ExactRational(std::move(sum));
}

ExactRational expected_down_degree(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  return ExactRational(n + 1) * harmonic(n) - ExactRational(2 * static_cast<std::int64_t>(n));
}

std::vector<ExactRational> triple_sum_prefixes(int max_n) {
  if (max_n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<ExactRational> out;
  out.reserve(max_n);
  mpq_class sum = 0;
  out.emplace_back(sum);
  mpz_class lcm = 1;  // lcm(1..i-1)
  std::vector<mpz_class> share;
  for (int i = 2; i <= max_n; ++i) {
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(i - 1));
    // Every term 1/(i (k-1)) with k <= i is share[k] / (i * lcm) exactly.
    share.assign(i + 1, 0);
    for (int k = 2; k <= i; ++k) share[k] = lcm / (k - 1);
    mpz_class row = 0;
    for (int j = 2; j <= i; ++j)
      for (int k = 2; k <= j; ++k) row += share[k];
    sum += mpq_class(row, lcm * i);
    out.emplace_back(sum);
  }
  return out;
}

ExactRational triple_sum_expectation(int n) { return triple_sum_prefixes(n).back(); }

ExactRational expected_ltrm(int t) {
  if (t < 0) throw std::invalid_argument("word length must be nonnegative");
  return harmonic(t);
}

int down_degree(const Word& w) {
  if (w.empty()) return 0;
  return down_degree(w.standardize());
}

bool check_ltrm_increment(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw std::invalid_argument("increment check needs n >= 2");
  for (int i = 2; i <= n; ++i) {
    const Word larger = restrict_below(p, i + 1);
    const Word smaller = restrict_below(p, i);
    const auto letters = larger.letters();
    const int j = static_cast<int>(std::find(letters.begin(), letters.end(), i) - letters.begin()) + 1;
    const int increment = down_degree(larger) - down_degree(smaller);
    if (increment != ltr_maxima(suffix(smaller, i - j))) return false;
  }
  return true;
}

std::uint64_t Histogram::total() const {
  std::uint64_t t = 0;
  for (const auto& [value, count] : counts) t += count;
  return t;
}

ExactRational Histogram::mean() const {
  const std::uint64_t t = total();
  if (t == 0) throw std::domain_error("mean of an empty histogram");
  mpz_class weighted = 0;
  for (const auto& [value, count] : counts) {
    weighted += mpz_class(static_cast<long>(value)) * mpz_class(static_cast<unsigned long>(count));
  }
  return ExactRational(mpq_class(weighted, mpz_class(static_cast<unsigned long>(t))));
}

Histogram distribution(int n, Statistic stat, int jobs, int limit) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (n > limit) {
    throw std::out_of_range("n=" + std::to_string(n) + " exceeds the exhaustive limit " +
                            std::to_string(limit));
  }
  using Counts = std::map<std::int64_t, std::uint64_t>;
  auto map = [&](std::uint64_t begin, std::uint64_t end) {
    Counts local;
    for_each_in_rank_range(n, begin, end,
                           [&](const Permutation& p) { ++local[stat.evaluate(p)]; });
    return local;
  };
  auto merge = [](Counts& acc, Counts&& part) {
    for (const auto& [value, count] : part) acc[value] += count;
  };
  Histogram h;
  h.n = n;
  h.stat = stat;
  h.counts = reduce_over_ranks<Counts>(n, jobs, Counts{}, map, merge);
  return h;
}

std::vector<std::uint64_t> ltrm_generating_coefficients(int t) {
  if (t < 0) throw std::invalid_argument("word length must be nonnegative");
  std::vector<std::uint64_t> poly{1};
  for (int k = 1; k <= t; ++k) {
    // multiply by (q + k - 1)
    std::vector<std::uint64_t> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] += poly[d] * static_cast<std::uint64_t>(k - 1);
    }
    poly = std::move(next);
  }
  return poly;
}

MonteCarloEstimate monte_carlo_mean(int n, Statistic stat, std::uint64_t samples,
                                    std::uint64_t seed, int jobs) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (samples < 2) throw std::invalid_argument("Monte Carlo needs at least 2 samples");
  struct Moments {
    __int128 sum = 0;
    __int128 sum_sq = 0;
  };
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  auto parts = map_blocks<Moments>(static_cast<std::size_t>(blocks), jobs, [&](std::size_t b) {
    Rng rng(mix_seed(seed, b));
    const std::uint64_t count = std::min(kSampleBlock, samples - b * kSampleBlock);
    Moments m;
    for (std::uint64_t s = 0; s < count; ++s) {
      const __int128 x = stat.evaluate(random_permutation(n, rng));
      m.sum += x;
      m.sum_sq += x * x;
    }
    return m;
  });
  Moments total;
  for (const auto& m : parts) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  const auto count = static_cast<__int128>(samples);
  // Unbiased variance: (N sum_sq - sum^2) / (N (N-1)); the numerator is exact.
  const __int128 spread = count * total.sum_sq - total.sum * total.sum;
  MonteCarloEstimate est;
  est.samples = samples;
  est.mean = static_cast<double>(static_cast<long double>(total.sum) / static_cast<long double>(count));
  const long double variance = static_cast<long double>(spread) /
                               (static_cast<long double>(count) * static_cast<long double>(count - 1));
  est.standard_error = static_cast<double>(std::sqrt(variance / static_cast<long double>(count)));
  return est;
}

}  // namespace hassedeg
