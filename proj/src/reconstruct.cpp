#include "hassedeg/reconstruct.hpp"

#include <algorithm>
#include <string>

namespace hassedeg {

Permutation reconstruct(int n, const StrongDescentSet& d) {
  if (d.n() != n) {
    throw std::invalid_argument("descent set has degree " + std::to_string(d.n()) +
                                ", expected " + std::to_string(n));
  }
  if (d.r() != 1) throw std::invalid_argument("reconstruction needs the first descent set (r=1)");

  // anchor[v] = min{a : t_{a,v} in d}, 0 if none.
  std::vector<int> anchor(n + 1, 0);
  for (const auto& t : d.members()) {
    if (anchor[t.b] == 0 || t.a < anchor[t.b]) anchor[t.b] = t.a;
  }

  std::vector<int> word{1};
  word.reserve(n);
  for (int v = 2; v <= n; ++v) {
    if (anchor[v] == 0) {
      word.push_back(v);
    } else {
      auto it = std::find(word.begin(), word.end(), anchor[v]);
      word.insert(it, v);
    }
  }

  Permutation result = Permutation::from_one_line(std::move(word));
  if (strong_descent_set(result, 1) != d) {
    throw ValidationFailure("no permutation of degree " + std::to_string(n) +
                            " has this strong descent set");
  }
  return result;
}

bool is_realizable(int n, const std::vector<Transposition>& members) {
  try {
    reconstruct(n, StrongDescentSet(n, 1, members));
    return true;
  } catch (const ValidationFailure&) {
    return false;
  }
}

}  // namespace hassedeg
