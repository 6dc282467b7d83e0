#include "hassedeg/extremal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/parallel.hpp"

namespace hassedeg {

Statistic Statistic::parse(const std::string& text) {
  if (text == "down") return down();
  if (text == "up") return up();
  if (text == "total") return total();
  if (text.rfind("rth:", 0) == 0) {
    std::size_t used = 0;
    int r = 0;
    try {
      r = std::stoi(text.substr(4), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 4 || r < 1) {
      throw std::invalid_argument("bad order in statistic '" + text + "'");
    }
    return rth(r);
  }
  throw std::invalid_argument("unknown statistic '" + text + "' (down, up, total, rth:<r>)");
}

std::string Statistic::name() const {
  switch (kind) {
    case Kind::down: return "down";
    case Kind::up: return "up";
    case Kind::total: return "total";
    case Kind::rth: return "rth:" + std::to_string(r);
  }
  return "?";
}

std::int64_t Statistic::evaluate(const Permutation& p) const {
  switch (kind) {
    case Kind::down: return down_degree(p);
    case Kind::up: return up_degree(p);
    case Kind::total: return down_degree(p) + up_degree(p);
    case Kind::rth: return rth_down_degree(p, r);
  }
  return 0;
}

Permutation BlockLayout::generate() const {
  if (m < 0 || t < 0 || t + m > n) throw std::out_of_range("invalid extremal family parameters");
  std::vector<int> v;
  v.reserve(n);
  for (int x = t + m + 1; x <= n; ++x) v.push_back(x);
  for (int x = t + 1; x <= t + m; ++x) v.push_back(x);
  for (int x = 1; x <= t; ++x) v.push_back(x);
  return Permutation::from_one_line(std::move(v));
}

std::int64_t max_down_degree(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  const std::int64_t nn = n;
  return nn * nn / 4;
}

std::vector<Permutation> extremal_down_permutations(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::set<Permutation> found;
  for (int m : {n / 2, (n + 1) / 2}) {
    for (int t = 1; t <= n - m; ++t) found.insert(BlockLayout{n, m, t}.generate());
  }
  return {found.begin(), found.end()};
}

std::int64_t max_total_degree(int n) {
  if (n < 2) throw std::invalid_argument("maximal total degree needs n >= 2");
  return max_down_degree(n) + n - 2;
}

std::vector<Permutation> extremal_total_permutations(int n) {
  if (n < 2) throw std::invalid_argument("extremal total permutations need n >= 2");
  std::set<Permutation> orbit;
  std::vector<Permutation> frontier;
  for (int m : {n / 2, (n + 1) / 2}) {
    Permutation seed = BlockLayout{n, m, 0}.generate();
    if (orbit.insert(seed).second) frontier.push_back(seed);
  }
  while (!frontier.empty()) {
    Permutation p = frontier.back();
    frontier.pop_back();
    for (Permutation q : {reverse_positions(p), exchange_end_positions(p),
                          exchange_extreme_values(p)}) {
      if (orbit.insert(q).second) frontier.push_back(std::move(q));
    }
  }
  return {orbit.begin(), orbit.end()};
}

MaximumReport brute_force_max(int n, Statistic stat, int jobs, int limit) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (n > limit) {
    throw std::out_of_range("n=" + std::to_string(n) + " exceeds the exhaustive limit " +
                            std::to_string(limit));
  }
  auto map = [&](std::uint64_t begin, std::uint64_t end) {
    MaximumReport local;
    local.value = -1;
    for_each_in_rank_range(n, begin, end, [&](const Permutation& p) {
      const std::int64_t v = stat.evaluate(p);
      if (v > local.value) {
        local.value = v;
        local.attaining.clear();
      }
      if (v == local.value) local.attaining.push_back(p);
    });
    return local;
  };
  // Chunks are visited in rank order and each chunk lists in rank order, so
  // the merged list is already lexicographically sorted.
  auto merge = [](MaximumReport& acc, MaximumReport&& part) {
    if (part.value > acc.value) {
      acc = std::move(part);
    } else if (part.value == acc.value) {
      acc.attaining.insert(acc.attaining.end(), part.attaining.begin(), part.attaining.end());
    }
  };
  MaximumReport init;
  init.value = -1;
  return reduce_over_ranks<MaximumReport>(n, jobs, std::move(init), map, merge);
}

}  // namespace hassedeg
