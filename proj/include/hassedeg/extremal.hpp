#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hassedeg/permutation.hpp"

namespace hassedeg {

// Which degree statistic an exhaustive or sampled computation measures.
struct Statistic {
  enum class Kind { down, up, total, rth };
  Kind kind = Kind::down;
  int r = 1;  // used only by Kind::rth

  static Statistic down() { return {Kind::down, 1}; }
  static Statistic up() { return {Kind::up, 1}; }
  static Statistic total() { return {Kind::total, 1}; }
  static Statistic rth(int r) { return {Kind::rth, r}; }

  // "down", "up", "total", or "rth:<r>"
  static Statistic parse(const std::string& text);
  std::string name() const;

  std::int64_t evaluate(const Permutation& p) const;

  bool operator==(const Statistic&) const = default;
};

// Block sizes m in {floor(n/2), ceil(n/2)} with offset 1 <= t <= n-m give
// [t+m+1..n, t+1..t+m, 1..t].
struct BlockLayout {
  int n;
  int m;
  int t;

  Permutation generate() const;
};

std::int64_t max_down_degree(int n);
std::vector<Permutation> extremal_down_permutations(int n);

std::int64_t max_total_degree(int n);
// Orbit of [m+1..n, 1..m] for both m under reversal, exchanging the end
// positions and exchanging the values 1 and n; sorted.
std::vector<Permutation> extremal_total_permutations(int n);

struct MaximumReport {
  std::int64_t value = 0;
  std::vector<Permutation> attaining;  // sorted lexicographically
};

inline constexpr int kDefaultExhaustiveLimit = 9;

// Exhaustive maximum over S_n, split over `jobs` workers by rank ranges.
// Throws std::out_of_range when n exceeds `limit`.
MaximumReport brute_force_max(int n, Statistic stat, int jobs = 0,
                              int limit = kDefaultExhaustiveLimit);

}  // namespace hassedeg
