#pragma once

// Definition-level reference implementations for tests. Nothing here calls
// into the library: lengths come from bubble-sort swap counts and descent
// sets from length differences over every transposition.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Pair = std::pair<int, int>;

inline int bubble_length(Perm p) {
  int swaps = 0;
  for (std::size_t pass = 0; pass < p.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        ++swaps;
      }
    }
  }
  return swaps;
}

inline Perm swap_values(Perm p, int a, int b) {
  for (int& x : p) {
    if (x == a) x = b;
    else if (x == b) x = a;
  }
  return p;
}

// Pairs (a,b) with l(p) > l(t_{a,b} p) > l(p) - 2r.
inline std::vector<Pair> descent_set(const Perm& p, int r) {
  const int n = static_cast<int>(p.size());
  const int base = bubble_length(p);
  std::vector<Pair> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const int d = bubble_length(swap_values(p, a, b)) - base;
      if (d < 0 && d > -2 * r) out.emplace_back(a, b);
    }
  return out;
}

inline std::vector<Pair> up_set(const Perm& p) {
  const int n = static_cast<int>(p.size());
  const int base = bubble_length(p);
  std::vector<Pair> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (bubble_length(swap_values(p, a, b)) - base == 1) out.emplace_back(a, b);
  return out;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool has_triangle(int n, const std::vector<Pair>& edges) {
  std::set<Pair> e(edges.begin(), edges.end());
  auto adj = [&](int u, int v) { return e.count({std::min(u, v), std::max(u, v)}) > 0; };
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z)
        if (adj(x, y) && adj(y, z) && adj(x, z)) return true;
  return false;
}

}  // namespace oracle
