#pragma once

#include <optional>
#include <string>
#include <vector>

#include "factorlab/check.hpp"
#include "factorlab/decomposition.hpp"

namespace factorlab {

// Exact rational, normalized with a positive denominator. Threshold
// comparisons at ties decide whether theorems apply, so nothing here ever
// touches floating point.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n, long long d = 1);
  std::string to_string() const;
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) {
    return a.num * b.den <= b.num * a.den;
  }
};

// Result of a condition sweep. When the condition fails, violator names the
// first offending set in size-then-lexicographic order (for the
// neighborhood condition: the offending pair), and lhs/rhs are the two
// sides of the violated inequality.
struct ConditionReport {
  bool holds = true;
  std::optional<std::vector<int>> violator;
  Rat lhs, rhs;
};

// o(G-S) <= 2n|S| for every S, the empty set included.
ConditionReport check_cui_kano(const Graph& g, int n, const Budget& budget = {});
// Same sweep with S = {} excluded.
ConditionReport check_cui_kano_nonempty(const Graph& g, int n,
                                        const Budget& budget = {});
// o(G-S) <= (2n-1)|S| for every S; equivalent to having a {1,3,...,2n-1}-factor.
ConditionReport check_amahashi(const Graph& g, int n, const Budget& budget = {});
// i(G-S) <= n|S| (isolated vertices); equivalent to having a [1,n]-factor
// for n >= 2.  At n = 1 only necessity survives: K_3 meets the bound for
// every S yet has no perfect matching.
ConditionReport check_las_vergnas(const Graph& g, int n,
                                  const Budget& budget = {});
// Every non-adjacent pair u,v satisfies |N(u) u N(v)| > the four-term
// threshold max{(g-2)/(2n)-1, (2g-4)/(4n+1), (g-1)/(2n+1), 4n-3}.
ConditionReport check_neighborhood_condition(const Graph& g, int n);

// True iff the four-term maximum is attained by (g-2)/(2n)-1; guaranteed
// whenever g >= 8n^2 + 2n + 2.
bool threshold_simplifies(long long g, long long n);

// Witness that a graph has no H_n-factor: a nonempty S whose removal leaves
// at least 2n|S|+1 odd components, each itself H_n-factorless. odd_comps
// lists exactly those certified components (other components of G-S may
// exist, be odd, and even have factors; they carry no weight here).
struct Certificate {
  std::vector<int> s_set;
  std::vector<std::vector<int>> odd_comps;
  int n = 1;
  std::vector<bool> factorless_flags;
};

// Builds the certificate from the H_n*-decomposition: S = A, certified
// components = the components of G[D] (full components of G-S since C and D
// span no edges). Validates every Certificate invariant before returning,
// re-proving each component factorless by direct search. An invariant
// failure throws TheoremViolation: that means the structure theory itself
// broke, which is the most important thing this toolkit could ever report.
Certificate extract_certificate(const Graph& g, int n,
                                const Budget& budget = {});

// Passes iff check_cui_kano failing or an H_n-factor existing.
CheckResult verify_corollary_ck(const Graph& g, int n,
                                const Budget& budget = {});
// For connected odd-order graphs satisfying the nonempty-set condition:
// passes iff an H_n-factor exists or G is h_n_star(n)-critical. Skips when
// the preconditions do not hold.
CheckResult verify_odd_order_theorem(const Graph& g, int n,
                                     const Budget& budget = {});
// For graphs with no odd components: passes unless every G-v has an
// H_n-factor while G itself has none.
CheckResult verify_g_minus_v_theorem(const Graph& g, int n,
                                     const Budget& budget = {});
// For k-connected even-order G and a non-adjacent pair u,v with
// |N(u) u N(v)| >= g - 2nk: passes iff G and G+uv agree on having an
// H_n-factor. Skips when the preconditions do not hold.
CheckResult verify_kconnected_theorem(const Graph& g, int n, int k, int u,
                                      int v, const Budget& budget = {});

// The three extremal families. Orders: (2n+1)^2 + 1, m + 2nm + 1, and
// k + 2nk + 1.
Graph gen_apex_cliques(int n);            // K_1 + (2n+1) K_{2n+1}
Graph gen_bipartite_sharp(int n, int m);  // K_{m, 2nm+1}
Graph gen_clique_independent(int n, int k);  // K_k + (2nk+1) K_1, k odd

// K_{m, 2nm+1} for the smallest m with m > 1/epsilon, plus the m-side S.
// Validates o(G-S) = 2nm+1 < (2n+epsilon) m and factorlessness; a
// validation failure throws TheoremViolation.
struct EpsilonWitness {
  Graph graph;
  std::vector<int> s_set;
  int m = 1;
};
EpsilonWitness epsilon_witness(int n, const Rat& epsilon);

}  // namespace factorlab
