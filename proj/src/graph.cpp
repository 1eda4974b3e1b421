#include "factorlab/graph.hpp"

#include <algorithm>

#include "factorlab/errors.hpp"

namespace factorlab {

void Graph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= order_)
    throw ArgumentError(std::string(what) + ": vertex " + std::to_string(v) +
                        " out of range for order " + std::to_string(order_));
}

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
  if (order < 0) throw ArgumentError("graph order must be nonnegative");
  adj_.assign(order_, Bitset(order_));
  deg_.assign(order_, 0);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= order_ || v < 0 || v >= order_)
      throw ArgumentError("edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "} out of range for order " +
                          std::to_string(order_));
    if (u == v)
      throw ArgumentError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adj_[u].test(v))
      throw ArgumentError("duplicate edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "}");
    adj_[u].set(v);
    adj_[v].set(u);
    ++deg_[u];
    ++deg_[v];
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

Graph Graph::complete(int m) {
  if (m < 0) throw ArgumentError("complete: order must be nonnegative");
  std::vector<Edge> e;
  e.reserve(m * (m - 1) / 2);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) e.push_back({u, v});
  return Graph(m, std::move(e));
}

Graph Graph::complete_bipartite(int a, int b) {
  if (a < 0 || b < 0)
    throw ArgumentError("complete_bipartite: sides must be nonnegative");
  std::vector<Edge> e;
  e.reserve(a * b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph(a + b, std::move(e));
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u, "adjacent");
  check_vertex(v, "adjacent");
  return u != v && adj_[u].test(v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return int(it - edges_.begin());
}

std::vector<std::vector<int>> components(const Graph& g) {
  return components_avoiding(g, Bitset(g.order()));
}

std::vector<std::vector<int>> components_avoiding(const Graph& g,
                                                  const Bitset& removed) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  Bitset seen = removed;
  for (int v = 0; v < n; ++v) {
    if (seen.test(v)) continue;
    Bitset comp(n), frontier(n);
    comp.set(v);
    frontier.set(v);
    while (frontier.any()) {
      Bitset next(n);
      frontier.for_each([&](int u) { next |= g.adj_row(u); });
      next -= comp;
      next -= removed;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp.to_vector());
  }
  return out;
}

OddComponents odd_components(const Graph& g, const std::vector<int>& s) {
  Bitset removed(g.order());
  for (int v : s) {
    if (v < 0 || v >= g.order())
      throw ArgumentError("odd_components: vertex " + std::to_string(v) +
                          " out of range for order " +
                          std::to_string(g.order()));
    removed.set(v);
  }
  OddComponents out;
  for (auto& comp : components_avoiding(g, removed)) {
    if (comp.size() % 2 == 1) {
      ++out.count;
      out.comps.push_back(std::move(comp));
    }
  }
  return out;
}

int odd_component_count(const Graph& g, const Bitset& removed) {
  const int n = g.order();
  int count = 0;
  Bitset seen = removed;
  for (int v = 0; v < n; ++v) {
    if (seen.test(v)) continue;
    Bitset comp(n), frontier(n);
    comp.set(v);
    frontier.set(v);
    while (frontier.any()) {
      Bitset next(n);
      frontier.for_each([&](int u) { next |= g.adj_row(u); });
      next -= comp;
      next -= removed;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    count += comp.count() & 1;
  }
  return count;
}

InducedSubgraph induced(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> labels = keep;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<int> back(g.order(), -1);
  for (int i = 0; i < int(labels.size()); ++i) {
    int v = labels[i];
    if (v < 0 || v >= g.order())
      throw ArgumentError("induced: vertex " + std::to_string(v) +
                          " out of range for order " +
                          std::to_string(g.order()));
    back[v] = i;
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (back[u] >= 0 && back[v] >= 0) e.push_back({back[u], back[v]});
  return {Graph(int(labels.size()), std::move(e)), std::move(labels)};
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& drop) {
  Bitset removed(g.order());
  for (int v : drop) {
    if (v < 0 || v >= g.order())
      throw ArgumentError("delete_vertices: vertex " + std::to_string(v) +
                          " out of range for order " +
                          std::to_string(g.order()));
    removed.set(v);
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!removed.test(v)) keep.push_back(v);
  return induced(g, keep);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  const int off = g.order();
  for (auto [u, v] : h.edges()) e.push_back({u + off, v + off});
  return Graph(g.order() + h.order(), std::move(e));
}

Graph copies(const Graph& g, int t) {
  if (t < 0) throw ArgumentError("copies: count must be nonnegative");
  Graph out = Graph::empty(0);
  for (int i = 0; i < t; ++i) out = disjoint_union(out, g);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> e = disjoint_union(g, h).edges();
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) e.push_back({u, g.order() + v});
  return Graph(g.order() + h.order(), std::move(e));
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw ArgumentError("add_edge: vertex out of range");
  if (u == v) throw ArgumentError("add_edge: loops are not allowed");
  if (g.adjacent(u, v))
    throw ArgumentError("add_edge: edge {" + std::to_string(std::min(u, v)) +
                        "," + std::to_string(std::max(u, v)) +
                        "} already present");
  std::vector<Edge> e = g.edges();
  e.push_back({u, v});
  return Graph(g.order(), std::move(e));
}

namespace {

bool connected_avoiding(const Graph& g, const Bitset& removed) {
  const int n = g.order();
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!removed.test(v)) {
      start = v;
      break;
    }
  if (start < 0) return false;  // no vertices left
  Bitset comp(n), frontier(n);
  comp.set(start);
  frontier.set(start);
  while (frontier.any()) {
    Bitset next(n);
    frontier.for_each([&](int u) { next |= g.adj_row(u); });
    next -= comp;
    next -= removed;
    comp |= next;
    frontier = next;
  }
  return comp.count() == n - removed.count();
}

bool sweep_subsets_connected(const Graph& g, int pick, Bitset& removed,
                             int first) {
  if (pick == 0) return connected_avoiding(g, removed);
  for (int v = first; v <= g.order() - pick; ++v) {
    removed.set(v);
    if (!sweep_subsets_connected(g, pick - 1, removed, v + 1)) {
      removed.reset(v);
      return false;
    }
    removed.reset(v);
  }
  return true;
}

}  // namespace

bool is_k_connected(const Graph& g, int k, int max_k) {
  if (k < 1) throw ArgumentError("is_k_connected: k must be positive");
  if (k > max_k)
    throw ArgumentError("is_k_connected: k=" + std::to_string(k) +
                        " exceeds cap " + std::to_string(max_k));
  if (g.order() <= k) return false;
  for (int size = 0; size < k; ++size) {
    Bitset removed(g.order());
    if (!sweep_subsets_connected(g, size, removed, 0)) return false;
  }
  return true;
}

std::vector<int> neighborhood_union(const Graph& g, int u, int v) {
  if (u == v)
    throw ArgumentError("neighborhood_union: vertices must be distinct");
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw ArgumentError("neighborhood_union: vertex out of range");
  return (g.adj_row(u) | g.adj_row(v)).to_vector();
}

}  // namespace factorlab
