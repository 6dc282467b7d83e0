#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/permutation.hpp"

namespace hassedeg {

// Undirected simple graph on vertices 1..n, stored as adjacency bit rows.
class LabeledGraph {
 public:
  using Edge = std::pair<int, int>;

  explicit LabeledGraph(int n);
  // Rejects self-loops and endpoints outside 1..n; duplicate edges collapse.
  LabeledGraph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  // Sorted ascending, each edge once as (min, max).
  std::vector<Edge> edges() const;

  bool operator==(const LabeledGraph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

  // Raw bit-row access for the clique search.
  std::size_t words_per_row() const { return words_; }
  const std::uint64_t* row(int v) const { return rows_.data() + (v - 1) * words_; }

 private:
  int n_;
  std::size_t words_;
  std::int64_t edges_ = 0;
  std::vector<std::uint64_t> rows_;
};

LabeledGraph graph_of(const StrongDescentSet& d);
LabeledGraph strong_descent_graph(const Permutation& p, int r = 1);
// Edges {a,b} with l(t_{a,b} p) - l(p) = +-1.
LabeledGraph total_degree_graph(const Permutation& p);
// Edges {a,b} with l(t_{a,b} p) = l(p) + 1.
LabeledGraph up_graph(const Permutation& p);

// Complete r-partite graph on n vertices, parts as equal as possible, larger
// parts first, each part a run of consecutive labels.
LabeledGraph turan_graph(int r, int n);
std::int64_t turan_number(int r, int n);

bool has_clique(const LabeledGraph& g, int k);
bool is_triangle_free(const LabeledGraph& g);
int clique_number(const LabeledGraph& g);

// The independent sides when g is complete multipartite (its complement is
// a disjoint union of cliques), sorted; std::nullopt otherwise.
std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const LabeledGraph& g);
bool is_complete_multipartite(const LabeledGraph& g);

int component_count(const LabeledGraph& g);
int min_degree(const LabeledGraph& g);

// Positions 1 <= i < n where every value of p(1..i) exceeds every value of
// p(i+1..n).
int global_descent_count(const Permutation& p);

}  // namespace hassedeg
