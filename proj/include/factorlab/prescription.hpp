#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

// A finite set of target degrees for one vertex. Values are kept strictly
// increasing; negatives are legal (a set containing a negative value can
// never be met exactly, which is how the starred families force a gap of at
// least one below the smallest honest degree). A set is "allowed" when
// consecutive values are at most 2 apart; the decomposition theory only
// applies to allowed sets, and the verifiers insist on that, while the
// optimizer accepts any set.
class DegreeSet {
 public:
  explicit DegreeSet(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  bool allowed() const { return allowed_; }
  int min() const { return values_.front(); }
  int max() const { return values_.back(); }
  bool contains(int d) const;
  std::string to_string() const;  // e.g. "{-1,1,2}"

  bool operator==(const DegreeSet&) const = default;

 private:
  std::vector<int> values_;
  bool allowed_;
};

DegreeSet make_degree_set(std::vector<int> values);

// The all-odd family {1, 3, ..., 2n-1}.
DegreeSet h_o(int n);
// {1, 3, ..., 2n-1, 2n}.
DegreeSet h_n(int n);
// h_n with -1 adjoined.
DegreeSet h_n_star(int n);
// The interval {a, a+1, ..., b}.
DegreeSet interval_set(int a, int b);

// Smallest distance from d to a member of the set.
int vertex_deviation(int d, const DegreeSet& set);

// Per-vertex degree prescription for a graph of a fixed order.
class Prescription {
 public:
  Prescription() = default;  // order 0, useful as a placeholder
  Prescription(int order, const DegreeSet& uniform);
  explicit Prescription(std::vector<DegreeSet> per_vertex);

  int order() const { return int(sets_.size()); }
  const DegreeSet& at(int v) const;
  bool is_allowed() const;

  Prescription with_override(int v, const DegreeSet& set) const;
  // Prescription for an induced subgraph: keeps the sets of the listed
  // original vertices, in their order.
  Prescription restricted(const std::vector<int>& original_labels) const;

  bool operator==(const Prescription&) const = default;

 private:
  std::vector<DegreeSet> sets_;
};

// Replaces each H(v) by {h - e(v,X) : h in H(v)}: the prescription seen by
// G - X when v keeps its edges into X.
Prescription shift_by_set(const Prescription& p, const Graph& g,
                          const std::vector<int>& x);

// A spanning subgraph of a fixed host, stored as a bitmask over the host's
// sorted edge list. Hosts therefore stay at 62 edges or fewer wherever
// these are produced.
struct SpanningSubgraph {
  Graph host;
  std::uint64_t edge_mask = 0;
  std::vector<int> degrees;

  static SpanningSubgraph from_mask(const Graph& host, std::uint64_t mask);
  static SpanningSubgraph from_edges(const Graph& host,
                                     const std::vector<Edge>& edges);
  std::vector<Edge> chosen_edges() const;
};

// Deviation of F from p: sum over vertices of the distance from F's degree
// to the vertex's target set.
int deviation(const SpanningSubgraph& f, const Prescription& p);

// Literal syntax used by the CLI: "Hn:2", "Ho:2", "Hn*:2", "{1,3,4}",
// "[1,4]". The order fixes how many vertices the uniform result covers.
Prescription parse_prescription_literal(const std::string& text, int order);

// Override file: lines "v: <literal>", blank lines and '#' comments ignored.
Prescription apply_prescription_overrides(const Prescription& base,
                                          const std::string& text);

}  // namespace factorlab
