#include "hassedeg/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hassedeg {

namespace {

std::int64_t merge_count(std::vector<int>& a, std::vector<int>& scratch, std::size_t lo,
                         std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t count = merge_count(a, scratch, lo, mid) + merge_count(a, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      count += static_cast<std::int64_t>(mid - i);
      scratch[k++] = a[j++];
    } else {
      scratch[k++] = a[i++];
    }
  }
  while (i < mid) scratch[k++] = a[i++];
  while (j < hi) scratch[k++] = a[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, a.begin() + lo);
  return count;
}

}  // namespace

Permutation Permutation::from_one_line(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw std::invalid_argument("permutation must have at least one entry");
  std::vector<char> seen(n + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    }
    if (seen[v]) throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[v] = 1;
  }
  return Permutation(std::move(values));
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(from_one_line(std::vector<int>(values))) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '[';
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  return os << ']';
}

Permutation detail_unchecked(std::vector<int> values) { return Permutation(std::move(values)); }

Transposition Transposition::of(int x, int y) {
  if (x == y) throw std::invalid_argument("transposition needs two distinct values");
  if (x > y) std::swap(x, y);
  if (x < 1) throw std::invalid_argument("transposition values must be positive");
  return {x, y};
}

std::ostream& operator<<(std::ostream& os, const Transposition& t) {
  return os << "t(" << t.a << ',' << t.b << ')';
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  std::vector<int> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 1) {
    throw std::invalid_argument("word letters must be positive");
  }
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw std::invalid_argument("duplicate letter " + std::to_string(*dup));
  }
}

Permutation Word::standardize() const {
  const int n = size();
  if (n == 0) throw std::invalid_argument("cannot standardize the empty word");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return letters_[x] < letters_[y]; });
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) out[order[k]] = k + 1;
  return detail_unchecked(std::move(out));
}

Word as_word(const Permutation& p) {
  return Word(std::vector<int>(p.values().begin(), p.values().end()));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> q(n);
  for (int i = 1; i <= n; ++i) q[p(i) - 1] = i;
  return detail_unchecked(std::move(q));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("degree mismatch in compose");
  const int n = p.size();
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = p(q(i));
  return detail_unchecked(std::move(out));
}

std::int64_t inversion_number(const Permutation& p) {
  std::vector<int> a(p.values().begin(), p.values().end());
  std::vector<int> scratch(a.size());
  return merge_count(a, scratch, 0, a.size());
}

std::int64_t inversion_number_naive(const Permutation& p) {
  std::int64_t count = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int k = i + 1; k <= p.size(); ++k)
      if (p(i) > p(k)) ++count;
  return count;
}

Permutation apply_transposition_left(Transposition t, const Permutation& p) {
  if (t.b > p.size()) throw std::out_of_range("transposition exceeds permutation degree");
  std::vector<int> v(p.values().begin(), p.values().end());
  for (int& x : v) {
    if (x == t.a) {
      x = t.b;
    } else if (x == t.b) {
      x = t.a;
    }
  }
  return detail_unchecked(std::move(v));
}

Permutation apply_transposition_right(const Permutation& p, Transposition t) {
  if (t.b > p.size()) throw std::out_of_range("transposition exceeds permutation degree");
  std::vector<int> v(p.values().begin(), p.values().end());
  std::swap(v[t.a - 1], v[t.b - 1]);
  return detail_unchecked(std::move(v));
}

Word restrict_below(const Permutation& p, int bound) {
  if (bound < 2 || bound > p.size() + 1) {
    throw std::out_of_range("restriction bound " + std::to_string(bound) +
                            " outside 2.." + std::to_string(p.size() + 1));
  }
  std::vector<int> out;
  out.reserve(bound - 1);
  for (int v : p.values())
    if (v < bound) out.push_back(v);
  return Word(std::move(out));
}

Word suffix(const Word& w, int length) {
  if (length < 0 || length > w.size()) {
    throw std::out_of_range("suffix length " + std::to_string(length) + " outside 0.." +
                            std::to_string(w.size()));
  }
  auto letters = w.letters();
  return Word(std::vector<int>(letters.end() - length, letters.end()));
}

int ltr_maxima(const Word& w) {
  int count = 0;
  int best = std::numeric_limits<int>::min();
  for (int v : w.letters()) {
    if (v > best) {
      best = v;
      ++count;
    }
  }
  return count;
}

int ltr_maxima(const Permutation& p) { return ltr_maxima(as_word(p)); }

int longest_decreasing_subsequence(const Permutation& p) {
  // Patience sorting on negated values.
  std::vector<int> tails;
  for (int v : p.values()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), -v);
    if (it == tails.end()) {
      tails.push_back(-v);
    } else {
      *it = -v;
    }
  }
  return static_cast<int>(tails.size());
}

Permutation reverse_positions(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return detail_unchecked(std::move(v));
}

Permutation exchange_end_positions(const Permutation& p) {
  if (p.size() < 2) throw std::invalid_argument("exchange_end_positions needs n >= 2");
  return apply_transposition_right(p, Transposition{1, p.size()});
}

Permutation exchange_extreme_values(const Permutation& p) {
  if (p.size() < 2) throw std::invalid_argument("exchange_extreme_values needs n >= 2");
  return apply_transposition_left(Transposition{1, p.size()}, p);
}

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
      throw std::overflow_error(std::to_string(n) + "! does not fit in 64 bits");
    }
    f *= static_cast<std::uint64_t>(k);
  }
  return f;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t smaller_later = 0;
    for (int k = i + 1; k <= n; ++k)
      if (p(k) < p(i)) ++smaller_later;
    r += smaller_later * factorial(n - i);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t k) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  const std::uint64_t total = factorial(n);
  if (k >= total) {
    throw std::out_of_range("rank " + std::to_string(k) + " outside 0.." +
                            std::to_string(total - 1));
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto digit = static_cast<std::size_t>(k / f);
    k %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return detail_unchecked(std::move(out));
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Permutation random_permutation(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(v[i], v[j]);
  }
  return detail_unchecked(std::move(v));
}

Permutation random_permutation(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_permutation(n, rng);
}

bool next_lexicographic(std::vector<int>& values) {
  return std::next_permutation(values.begin(), values.end());
}

void for_each_in_rank_range(int n, std::uint64_t begin, std::uint64_t end,
                            const std::function<void(const Permutation&)>& fn) {
  const std::uint64_t total = factorial(n);
  end = std::min(end, total);
  if (begin >= end) return;
  Permutation current = unrank(n, begin);
  std::vector<int> v(current.values().begin(), current.values().end());
  for (std::uint64_t k = begin; k < end; ++k) {
    fn(current);
    if (k + 1 < end) {
      next_lexicographic(v);
      current = detail_unchecked(v);
    }
  }
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  for_each_in_rank_range(n, 0, factorial(n), fn);
}

std::vector<Permutation> enumerate(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace hassedeg
