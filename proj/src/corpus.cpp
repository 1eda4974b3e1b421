#include "factorlab/corpus.hpp"

#include <cmath>
#include <random>

#include "factorlab/errors.hpp"

namespace factorlab {

void iterate_labeled_graphs(int max_vertices,
                            const std::function<void(const Graph&)>& visit) {
  if (max_vertices < 1)
    throw ArgumentError("iterate_labeled_graphs: need at least one vertex");
  if (max_vertices > 6)
    throw ArgumentError(
        "iterate_labeled_graphs: capped at 6 vertices (32768 graphs); larger "
        "sweeps need their own enumeration");
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<Edge> all;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) all.push_back({u, v});
    const int m = int(all.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) edges.push_back(all[i]);
      visit(Graph(n, std::move(edges)));
    }
  }
}

std::vector<Graph> labeled_graphs(int max_vertices) {
  std::vector<Graph> out;
  iterate_labeled_graphs(max_vertices,
                         [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> sample_gnp(int count, int size, double p,
                              std::uint64_t seed) {
  if (count < 0) throw ArgumentError("sample_gnp: negative count");
  if (size < 0) throw ArgumentError("sample_gnp: negative size");
  if (!(p >= 0.0 && p <= 1.0))
    throw ArgumentError("sample_gnp: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  const std::uint64_t threshold =
      (std::uint64_t)std::llround(std::ldexp(p, 53));
  std::vector<Graph> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    std::vector<Edge> edges;
    for (int v = 1; v < size; ++v)
      for (int u = 0; u < v; ++u)
        if ((rng() >> 11) < threshold) edges.push_back({u, v});
    out.push_back(Graph(size, std::move(edges)));
  }
  return out;
}

}  // namespace factorlab
