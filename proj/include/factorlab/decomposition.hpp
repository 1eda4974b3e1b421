#pragma once

#include <vector>

#include "factorlab/check.hpp"
#include "factorlab/solver.hpp"

namespace factorlab {

// Canonical vertex partition read off from the optimal-degree sets I(v):
//   C: I(v) a subset of H(v)         (v can always be satisfied)
//   A: not C, min I(v) >= max H(v)   (v always overshoots or meets the top)
//   B: not C, max I(v) <= min H(v)   (v always undershoots or meets the
//                                     bottom)
//   D: everything else.
// Requires an allowed prescription; the structure theory behind the
// verifiers below is false without that.
struct Decomposition {
  std::vector<int> a_set, b_set, c_set, d_set;  // sorted
  std::vector<std::vector<int>> degree_sets;    // I(v) per vertex
  Prescription prescription;
  int delta = 0;  // optimum found by the search
};

Decomposition decompose(const Graph& g, const Prescription& p,
                        const Budget& budget = {});

// c(D) + sum_B min H(v) - sum_A max H(v) - sum_B deg_{G-A}(v), where c(D)
// counts components of G[D]. Always equals the searched optimum; the
// acceptance suite re-proves that exhaustively.
int delta_by_formula(const Graph& g, const Prescription& p,
                     const Decomposition& d);

// Connected, deviation exactly 1, and every vertex lands in D.
bool is_critical(const Graph& g, const Prescription& p,
                 const Budget& budget = {});

// No edge of G joins C to D.
CheckResult verify_no_cd_edges(const Graph& g, const Decomposition& d);

// For v in D, [min I(v), max I(v)] intersected with H(v) contains no two
// consecutive integers. Vacuous when D is empty.
CheckResult verify_interval_lemma(const Decomposition& d);

// Each component T of G[D], under the prescription shifted by B and
// restricted to T, has deviation exactly 1, and each of its optimal
// subgraphs has exactly one deviating vertex.
CheckResult verify_component_criticality(const Graph& g, const Prescription& p,
                                         const Decomposition& d,
                                         const Budget& budget = {});

// Removing any single a in A leaves a graph whose decomposition is
// (A - a, B, C, D) under the label map.
CheckResult verify_vertex_removal(const Graph& g, const Prescription& p,
                                  const Decomposition& d,
                                  const Budget& budget = {});

}  // namespace factorlab
