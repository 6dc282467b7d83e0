#pragma once

#include <cstdint>
#include <vector>

#include "hassedeg/permutation.hpp"

namespace hassedeg {

struct DegreeProfile {
  int down = 0;
  int up = 0;
  int total = 0;

  bool operator==(const DegreeProfile&) const = default;
};

// The r-th strong descent set of a permutation of degree n, members sorted
// ascending by (a, b).
class StrongDescentSet {
 public:
  // Validates 1 <= r < n (r = 1 is also accepted for n = 1) and that every
  // member lies within 1..n; sorts and deduplicates.
  StrongDescentSet(int n, int r, std::vector<Transposition> members);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<Transposition>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Transposition t) const;
  bool is_subset_of(const StrongDescentSet& other) const;

  bool operator==(const StrongDescentSet&) const = default;

 private:
  int n_;
  int r_;
  std::vector<Transposition> members_;
};

// p covers q: q = t_{a,b} p for b = p(i) > p(k) = a, i < k, and no position
// strictly between holds a value strictly between a and b.
bool is_cover(const Permutation& p, const Permutation& q);

std::vector<Permutation> covered_by(const Permutation& p);
std::vector<Permutation> covers_of(const Permutation& p);

// Transpositions lowering the length by one (down) or raising it by one (up).
std::vector<Transposition> down_transpositions(const Permutation& p);
std::vector<Transposition> up_transpositions(const Permutation& p);

int down_degree(const Permutation& p);
int up_degree(const Permutation& p);
DegreeProfile total_degree(const Permutation& p);

StrongDescentSet strong_descent_set(const Permutation& p, int r = 1);
std::int64_t rth_down_degree(const Permutation& p, int r);

// l(t p) - l(p) through inversion counts; always odd. Slow path used as an
// oracle for the positional criteria above.
std::int64_t length_change(Transposition t, const Permutation& p);

}  // namespace hassedeg
