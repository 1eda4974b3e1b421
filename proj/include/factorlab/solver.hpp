#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "factorlab/prescription.hpp"

namespace factorlab {

// Caps for the exact search. max_millis of 0 means no wall-clock limit.
// Exceeding any cap raises BudgetError; for the full solve the error carries
// the best deviation bound proved so far.
struct Budget {
  int max_edges = 25;
  int max_vertices = 20;
  std::int64_t max_millis = 0;
};

struct SolveReport {
  int delta = 0;
  SpanningSubgraph witness;  // lexicographically smallest optimal edge mask
  // degree_sets[v] holds every degree v attains across all optimal
  // spanning subgraphs, sorted ascending.
  std::vector<std::vector<int>> degree_sets;
  std::int64_t optimum_count = 0;
};

// Exact minimum deviation by depth-first branch and bound over the host's
// edge list, with an admissible per-vertex interval bound. Deterministic:
// the witness is the numerically smallest optimal edge mask, and the degree
// sets aggregate over every optimal subgraph.
SolveReport solve(const Graph& g, const Prescription& p,
                  const Budget& budget = {});

// Existence-only searches; these stop at the first deviation-0 subgraph.
bool has_factor(const Graph& g, const Prescription& p,
                const Budget& budget = {});
// The witness, when one exists, is still the lexicographically smallest
// deviation-0 edge mask (the search order guarantees it).
std::optional<SpanningSubgraph> find_factor(const Graph& g,
                                            const Prescription& p,
                                            const Budget& budget = {});
bool has_hn_factor(const Graph& g, int n, const Budget& budget = {});

// Visits every optimal subgraph (deviation == delta) in increasing mask
// order. delta must be the true optimum, e.g. from solve().
void for_each_optimal(
    const Graph& g, const Prescription& p, int delta,
    const std::function<void(std::uint64_t mask,
                             const std::vector<int>& degrees)>& visit,
    const Budget& budget = {});

}  // namespace factorlab
