#include "hassedeg/descent_graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hassedeg {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& bits) {
  int c = 0;
  for (auto w : bits) c += std::popcount(w);
  return c;
}

bool any(const Bits& bits) {
  return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
}

// Branch and bound with a greedy colouring bound: a set coloured with c
// colours cannot hold a clique larger than c. Vertices are 0-based bits.
class CliqueSearch {
 public:
  CliqueSearch(const LabeledGraph& g, int target) : g_(g), target_(target) {}

  bool run() {
    Bits all(g_.words_per_row(), 0);
    for (int v = 0; v < g_.vertex_count(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    return extend(0, std::move(all));
  }

 private:
  static int lowest(const Bits& bits) {
    for (std::size_t w = 0; w < bits.size(); ++w)
      if (bits[w]) return static_cast<int>(w * 64) + std::countr_zero(bits[w]);
    return -1;
  }

  bool extend(int size, Bits candidates) {
    if (size >= target_) return true;
    if (size + popcount(candidates) < target_) return false;

    std::vector<int> order;
    std::vector<int> colour;
    Bits uncoloured = candidates;
    for (int c = 1; any(uncoloured); ++c) {
      Bits open = uncoloured;
      for (int v = lowest(open); v >= 0; v = lowest(open)) {
        const std::uint64_t bit = std::uint64_t{1} << (v % 64);
        open[v / 64] &= ~bit;
        uncoloured[v / 64] &= ~bit;
        const std::uint64_t* row = g_.row(v + 1);
        for (std::size_t w = 0; w < open.size(); ++w) open[w] &= ~row[w];
        order.push_back(v);
        colour.push_back(c);
      }
    }

    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] < target_) return false;
      const int v = order[i];
      Bits next(candidates.size());
      const std::uint64_t* row = g_.row(v + 1);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = candidates[w] & row[w];
      if (extend(size + 1, std::move(next))) return true;
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
    return false;
  }

  const LabeledGraph& g_;
  int target_;
};

}  // namespace

LabeledGraph::LabeledGraph(int n)
    : n_(n), words_((static_cast<std::size_t>(std::max(n, 1)) + 63) / 64) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  rows_.assign(words_ * static_cast<std::size_t>(n), 0);
}

LabeledGraph::LabeledGraph(int n, const std::vector<Edge>& edges) : LabeledGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void LabeledGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (u < 1 || v < 1 || u > n_ || v > n_) {
    throw std::out_of_range("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} outside 1.." + std::to_string(n_));
  }
  if (has_edge(u, v)) return;
  rows_[(u - 1) * words_ + (v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
  rows_[(v - 1) * words_ + (u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
  ++edges_;
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  return (rows_[(u - 1) * words_ + (v - 1) / 64] >> ((v - 1) % 64)) & 1U;
}

int LabeledGraph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

std::vector<LabeledGraph::Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

LabeledGraph graph_of(const StrongDescentSet& d) {
  LabeledGraph g(d.n());
  for (const auto& t : d.members()) g.add_edge(t.a, t.b);
  return g;
}

LabeledGraph strong_descent_graph(const Permutation& p, int r) {
  return graph_of(strong_descent_set(p, r));
}

LabeledGraph total_degree_graph(const Permutation& p) {
  LabeledGraph g(p.size());
  for (const auto& t : down_transpositions(p)) g.add_edge(t.a, t.b);
  for (const auto& t : up_transpositions(p)) g.add_edge(t.a, t.b);
  return g;
}

LabeledGraph up_graph(const Permutation& p) {
  LabeledGraph g(p.size());
  for (const auto& t : up_transpositions(p)) g.add_edge(t.a, t.b);
  return g;
}

LabeledGraph turan_graph(int r, int n) {
  if (n < 1 || r < 1 || r > n) {
    throw std::out_of_range("Turan graph needs 1 <= r <= n, got r=" + std::to_string(r) +
                            " n=" + std::to_string(n));
  }
  std::vector<int> part(n + 1);
  int label = 1;
  for (int j = 0; j < r; ++j) {
    const int size = n / r + (j < n % r ? 1 : 0);
    for (int s = 0; s < size; ++s) part[label++] = j;
  }
  LabeledGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

std::int64_t turan_number(int r, int n) {
  if (n < 1 || r < 1 || r > n) {
    throw std::out_of_range("Turan number needs 1 <= r <= n, got r=" + std::to_string(r) +
                            " n=" + std::to_string(n));
  }
  // Complete graph minus the edges inside each part.
  const std::int64_t q = n / r;
  const std::int64_t big = n % r;
  const std::int64_t nn = n;
  auto pairs = [](std::int64_t s) { return s * (s - 1) / 2; };
  return pairs(nn) - big * pairs(q + 1) - (r - big) * pairs(q);
}

bool has_clique(const LabeledGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  if (k > g.vertex_count()) return false;
  if (k == 1) return g.vertex_count() >= 1;
  if (k == 2) return g.edge_count() > 0;
  if (k == 3) return !is_triangle_free(g);
  return CliqueSearch(g, k).run();
}

bool is_triangle_free(const LabeledGraph& g) {
  const std::size_t words = g.words_per_row();
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    for (std::size_t w = 0; w < words; ++w)
      if (ru[w] & rv[w]) return false;
  }
  return true;
}

int clique_number(const LabeledGraph& g) {
  int k = g.vertex_count() > 0 ? 1 : 0;
  while (k < g.vertex_count() && has_clique(g, k + 1)) ++k;
  return k;
}

std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n + 1, -1);
  std::vector<std::vector<int>> parts;
  for (int v = 1; v <= n; ++v) {
    if (side[v] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    for (int u = v; u <= n; ++u) {
      if (side[u] < 0 && (u == v || !g.has_edge(u, v))) {
        side[u] = id;
        parts.back().push_back(u);
      }
    }
  }
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (g.has_edge(u, v) == (side[u] == side[v])) return std::nullopt;
  return parts;
}

bool is_complete_multipartite(const LabeledGraph& g) {
  return complete_multipartite_parts(g).has_value();
}

int component_count(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& [u, v] : g.edges()) {
    const int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components;
}

int min_degree(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return 0;
  int best = g.degree(1);
  for (int v = 2; v <= g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int global_descent_count(const Permutation& p) {
  const int n = p.size();
  int count = 0;
  int prefix_min = n + 1;
  // The prefix of length i dominates the rest iff it is exactly {n-i+1..n},
  // i.e. its minimum is n-i+1.
  for (int i = 1; i < n; ++i) {
    prefix_min = std::min(prefix_min, p(i));
    if (prefix_min == n - i + 1) ++count;
  }
  return count;
}

}  // namespace hassedeg
