#pragma once

#include <string>
#include <utility>
#include <vector>

#include "factorlab/bitset.hpp"

namespace factorlab {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..order-1. Immutable after
// construction; every "mutating" operation returns a new graph. Edges are
// stored normalized (u < v) and sorted, which fixes the edge indexing the
// optimizer's bitmask witnesses refer to.
class Graph {
 public:
  Graph() = default;
  Graph(int order, std::vector<Edge> edges);

  static Graph empty(int order) { return Graph(order, {}); }
  static Graph complete(int m);
  static Graph complete_bipartite(int a, int b);

  int order() const { return order_; }
  int edge_count() const { return int(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const { return deg_[v]; }
  std::vector<int> neighbors(int v) const { return adj_[v].to_vector(); }
  const Bitset& adj_row(int v) const { return adj_[v]; }

  // Index of edge {u,v} in edges(), or -1 when absent.
  int edge_index(int u, int v) const;

  // Number of edges from v into the vertex set X. v itself being in X does
  // not matter since there are no loops.
  int edges_into(int v, const Bitset& x) const { return adj_[v].count_and(x); }
  int edges_into(int v, const std::vector<int>& x) const {
    return edges_into(v, Bitset::from(order_, x));
  }

 private:
  void check_vertex(int v, const char* what) const;

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<Bitset> adj_;
  std::vector<int> deg_;
};

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Components of G - removed, in the original labels of g. Used by the
// subset sweeps, so it avoids building subgraph objects.
std::vector<std::vector<int>> components_avoiding(const Graph& g,
                                                  const Bitset& removed);

struct OddComponents {
  int count = 0;
  std::vector<std::vector<int>> comps;  // original labels, sorted as above
};

// Odd components of G - S. S may list vertices in any order; duplicates are
// tolerated. Out-of-range entries raise ArgumentError.
OddComponents odd_components(const Graph& g, const std::vector<int>& s);
int odd_component_count(const Graph& g, const Bitset& removed);

struct InducedSubgraph {
  Graph graph;
  // original_labels[i] is the vertex of the host graph that became vertex i.
  std::vector<int> original_labels;
};

InducedSubgraph induced(const Graph& g, const std::vector<int>& keep);
InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& drop);

// Disjoint union, with h's vertices relabeled to g.order()..g.order()+h.order()-1.
Graph disjoint_union(const Graph& g, const Graph& h);
// Disjoint union of t copies of g.
Graph copies(const Graph& g, int t);
// Disjoint union plus all edges between the two sides.
Graph join(const Graph& g, const Graph& h);
// Adds one edge; rejects loops and existing edges.
Graph add_edge(const Graph& g, int u, int v);

// True iff order > k and removing any fewer than k vertices leaves the rest
// connected, checked by enumerating all vertex subsets of size < k. k is
// capped (default 8) to keep that enumeration honest.
bool is_k_connected(const Graph& g, int k, int max_k = 8);

// N(u) union N(v) as a sorted list. u == v raises ArgumentError.
std::vector<int> neighborhood_union(const Graph& g, int u, int v);

}  // namespace factorlab
