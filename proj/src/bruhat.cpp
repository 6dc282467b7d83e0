#include "hassedeg/bruhat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace hassedeg {

namespace {

void check_order(int n, int r) {
  const bool ok = (r >= 1 && r < n) || (n == 1 && r == 1);
  if (!ok) {
    throw std::out_of_range("order r=" + std::to_string(r) + " outside 1.." +
                            std::to_string(std::max(1, n - 1)));
  }
}

// Prefix table: below[pos][val] = #{j <= pos : p(j) <= val}, both 0..n.
class PrefixCounts {
 public:
  explicit PrefixCounts(const Permutation& p) : n_(p.size()), table_((n_ + 1) * (n_ + 1), 0) {
    for (int pos = 1; pos <= n_; ++pos) {
      for (int val = 0; val <= n_; ++val) {
        at(pos, val) = at(pos - 1, val) + (p(pos) <= val ? 1 : 0);
      }
    }
  }

  // #{j : lo < j < hi, low_val < p(j) < high_val}
  int between(int lo, int hi, int low_val, int high_val) const {
    const int below_high = get(hi - 1, high_val - 1) - get(lo, high_val - 1);
    const int upto_low = get(hi - 1, low_val) - get(lo, low_val);
    return below_high - upto_low;
  }

 private:
  int get(int pos, int val) const { return table_[pos * (n_ + 1) + val]; }
  int& at(int pos, int val) { return table_[pos * (n_ + 1) + val]; }

  int n_;
  std::vector<int> table_;
};

}  // namespace

StrongDescentSet::StrongDescentSet(int n, int r, std::vector<Transposition> members)
    : n_(n), r_(r), members_(std::move(members)) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  check_order(n, r);
  for (const auto& t : members_) {
    if (t.a < 1 || t.a >= t.b || t.b > n) {
      throw std::out_of_range("member t(" + std::to_string(t.a) + "," + std::to_string(t.b) +
                              ") outside 1.." + std::to_string(n));
    }
  }
  if (!std::is_sorted(members_.begin(), members_.end())) std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool StrongDescentSet::contains(Transposition t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

bool StrongDescentSet::is_subset_of(const StrongDescentSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::vector<Transposition> down_transpositions(const Permutation& p) {
  const int n = p.size();
  std::vector<Transposition> out;
  for (int i = 1; i <= n; ++i) {
    const int b = p(i);
    // Largest value below b seen so far to the right of i; a later value a < b
    // is a cover iff it exceeds every such intermediate.
    int floor = 0;
    for (int k = i + 1; k <= n && floor < b - 1; ++k) {
      const int a = p(k);
      if (a < b && a > floor) {
        out.push_back({a, b});
        floor = a;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Transposition> up_transpositions(const Permutation& p) {
  const int n = p.size();
  std::vector<Transposition> out;
  for (int i = 1; i <= n; ++i) {
    const int a = p(i);
    int ceiling = n + 1;
    for (int k = i + 1; k <= n && ceiling > a + 1; ++k) {
      const int b = p(k);
      if (b > a && b < ceiling) {
        out.push_back({a, b});
        ceiling = b;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cover(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("degree mismatch in is_cover");
  const int n = p.size();
  int first = 0, second = 0;
  for (int pos = 1; pos <= n; ++pos) {
    if (p(pos) == q(pos)) continue;
    if (first == 0) {
      first = pos;
    } else if (second == 0) {
      second = pos;
    } else {
      return false;
    }
  }
  if (second == 0) return false;
  const int b = p(first);
  const int a = p(second);
  if (q(first) != a || q(second) != b || b < a) return false;
  for (int j = first + 1; j < second; ++j)
    if (p(j) > a && p(j) < b) return false;
  return true;
}

std::vector<Permutation> covered_by(const Permutation& p) {
  std::vector<Permutation> out;
  for (const auto& t : down_transpositions(p)) out.push_back(apply_transposition_left(t, p));
  return out;
}

std::vector<Permutation> covers_of(const Permutation& p) {
  std::vector<Permutation> out;
  for (const auto& t : up_transpositions(p)) out.push_back(apply_transposition_left(t, p));
  return out;
}

int down_degree(const Permutation& p) {
  const int n = p.size();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int b = p(i);
    int floor = 0;
    for (int k = i + 1; k <= n && floor < b - 1; ++k) {
      const int a = p(k);
      if (a < b && a > floor) {
        ++count;
        floor = a;
      }
    }
  }
  return count;
}

int up_degree(const Permutation& p) {
  const int n = p.size();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int a = p(i);
    int ceiling = n + 1;
    for (int k = i + 1; k <= n && ceiling > a + 1; ++k) {
      const int b = p(k);
      if (b > a && b < ceiling) {
        ++count;
        ceiling = b;
      }
    }
  }
  return count;
}

DegreeProfile total_degree(const Permutation& p) {
  DegreeProfile d;
  d.down = down_degree(p);
  d.up = up_degree(p);
  d.total = d.down + d.up;
  return d;
}

StrongDescentSet strong_descent_set(const Permutation& p, int r) {
  const int n = p.size();
  check_order(n, r);
  if (r == 1) return StrongDescentSet(n, 1, down_transpositions(p));
  const PrefixCounts counts(p);
  const Permutation where = inverse(p);
  std::vector<Transposition> out;
  // Value-major order yields the members already sorted.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const int i = where(b);
      const int k = where(a);
      if (i < k && counts.between(i, k, a, b) < r) out.push_back({a, b});
    }
  }
  return StrongDescentSet(n, r, std::move(out));
}

std::int64_t rth_down_degree(const Permutation& p, int r) {
  return static_cast<std::int64_t>(strong_descent_set(p, r).size());
}

std::int64_t length_change(Transposition t, const Permutation& p) {
  return inversion_number_naive(apply_transposition_left(t, p)) - inversion_number_naive(p);
}

}  // namespace hassedeg
