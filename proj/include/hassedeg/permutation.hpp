#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace hassedeg {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based in every public accessor.
class Permutation {
 public:
  // Throws std::invalid_argument naming the offending value unless `values`
  // is a rearrangement of {1..n}, n >= 1.
  static Permutation from_one_line(std::vector<int> values);
  static Permutation identity(int n);
  // w_0 = [n, n-1, ..., 1]
  static Permutation longest(int n);

  Permutation(std::initializer_list<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  // pi(position), 1-based
  int operator()(int position) const { return values_[position - 1]; }
  std::span<const int> values() const { return values_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const;

 private:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}
  friend Permutation detail_unchecked(std::vector<int> values);

  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Skips validation; callers guarantee `values` is a permutation of {1..n}.
Permutation detail_unchecked(std::vector<int> values);

// Unordered pair {a,b}, stored canonically with a < b.
struct Transposition {
  int a;
  int b;

  // Accepts the two values in either order; rejects a == b and a < 1.
  static Transposition of(int x, int y);

  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Transposition& t);

// Sequence of pairwise distinct positive integers, e.g. a restriction or a
// suffix of a permutation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  std::span<const int> letters() const { return letters_; }
  int operator[](int index) const { return letters_[index]; }

  bool operator==(const Word&) const = default;

  // Renames the k-th smallest letter to k.
  Permutation standardize() const;

 private:
  std::vector<int> letters_;
};

Word as_word(const Permutation& p);

Permutation inverse(const Permutation& p);
// (p * q)(i) = p(q(i))
Permutation compose(const Permutation& p, const Permutation& q);

// Number of pairs i<k with p(i) > p(k); equal to the Coxeter length.
std::int64_t inversion_number(const Permutation& p);
// O(n^2) pair count kept as a reference for tests.
std::int64_t inversion_number_naive(const Permutation& p);

// t * p: exchanges the values a and b in the one-line notation.
Permutation apply_transposition_left(Transposition t, const Permutation& p);
// p * t: exchanges the entries at positions a and b.
Permutation apply_transposition_right(const Permutation& p, Transposition t);

// Subsequence of the values smaller than `bound`, 2 <= bound <= n+1.
Word restrict_below(const Permutation& p, int bound);
// Last `length` letters of w.
Word suffix(const Word& w, int length);
int ltr_maxima(const Word& w);
int ltr_maxima(const Permutation& p);
int longest_decreasing_subsequence(const Permutation& p);

Permutation reverse_positions(const Permutation& p);     // p^r
Permutation exchange_end_positions(const Permutation& p);  // p^s = p t_{1,n}
Permutation exchange_extreme_values(const Permutation& p); // p^t = t_{1,n} p

// n! for n <= 20; std::overflow_error beyond.
std::uint64_t factorial(int n);

// Lexicographic rank via the Lehmer code.
std::uint64_t rank(const Permutation& p);
Permutation unrank(int n, std::uint64_t k);

// Reproducible stream: std::mt19937_64 (its output sequence is fixed by the
// standard) with rejection sampling for bounded draws, so results do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer, used to derive independent per-block seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Fisher-Yates shuffle of the identity.
Permutation random_permutation(int n, Rng& rng);
Permutation random_permutation(int n, std::uint64_t seed);

// Lexicographic successor in place; false once the last permutation is passed.
bool next_lexicographic(std::vector<int>& values);

// Yields the permutations of ranks [begin, end) in lexicographic order.
void for_each_in_rank_range(int n, std::uint64_t begin, std::uint64_t end,
                            const std::function<void(const Permutation&)>& fn);
// All n! permutations, lexicographic.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate(int n);

}  // namespace hassedeg
