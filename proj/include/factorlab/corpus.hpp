#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

// All labeled graphs of orders 1..max_vertices, in order of (order, edge
// mask). Capped at 6 (32768 graphs at order 6); anything larger belongs in
// purpose-built sweeps, not this convenience stream.
void iterate_labeled_graphs(int max_vertices,
                            const std::function<void(const Graph&)>& visit);
std::vector<Graph> labeled_graphs(int max_vertices);

// count samples of G(size, p), a deterministic function of all four
// arguments: a single mt19937_64 seeded with seed drives the whole stream,
// and edge {u,v} (u < v, column-major order as in graph6) is included when
// the generator's next draw, reduced to 53 bits, falls below p * 2^53.
std::vector<Graph> sample_gnp(int count, int size, double p,
                              std::uint64_t seed);

}  // namespace factorlab
