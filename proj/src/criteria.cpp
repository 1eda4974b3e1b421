#include "factorlab/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "factorlab/errors.hpp"

namespace factorlab {

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rat::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::string set_to_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

void check_sweep_cap(const Graph& g, const Budget& b, const char* what) {
  if (g.order() > b.max_vertices)
    throw BudgetError(std::string(what) + ": order " +
                      std::to_string(g.order()) +
                      " exceeds the subset-sweep cap of " +
                      std::to_string(b.max_vertices) + " vertices");
}

// Enumerates subsets of {0..n-1} in increasing size, lexicographic within a
// size. Stops early when f returns false.
template <class F>
void sweep_subsets(int n, bool include_empty, F f) {
  std::vector<int> s;
  Bitset mask(n);
  if (include_empty && !f(s, mask)) return;
  for (int k = 1; k <= n; ++k) {
    s.assign(k, 0);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
      Bitset m = Bitset::from(n, s);
      if (!f(s, m)) return;
      // next k-combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && s[i] == n - k + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }
}

ConditionReport sweep_condition(
    const Graph& g, bool include_empty,
    const std::function<long long(const Bitset&)>& measure,
    const std::function<long long(int)>& limit) {
  ConditionReport out;
  sweep_subsets(g.order(), include_empty,
                [&](const std::vector<int>& s, const Bitset& mask) {
                  long long lhs = measure(mask);
                  long long rhs = limit(int(s.size()));
                  if (lhs > rhs) {
                    out.holds = false;
                    out.violator = s;
                    out.lhs = Rat(lhs);
                    out.rhs = Rat(rhs);
                    return false;
                  }
                  return true;
                });
  return out;
}

}  // namespace

ConditionReport check_cui_kano(const Graph& g, int n, const Budget& budget) {
  if (n < 1) throw ArgumentError("check_cui_kano: n must be at least 1");
  check_sweep_cap(g, budget, "check_cui_kano");
  return sweep_condition(
      g, true,
      [&](const Bitset& mask) { return (long long)odd_component_count(g, mask); },
      [&](int size) { return 2LL * n * size; });
}

ConditionReport check_cui_kano_nonempty(const Graph& g, int n,
                                        const Budget& budget) {
  if (n < 1)
    throw ArgumentError("check_cui_kano_nonempty: n must be at least 1");
  check_sweep_cap(g, budget, "check_cui_kano_nonempty");
  return sweep_condition(
      g, false,
      [&](const Bitset& mask) { return (long long)odd_component_count(g, mask); },
      [&](int size) { return 2LL * n * size; });
}

ConditionReport check_amahashi(const Graph& g, int n, const Budget& budget) {
  if (n < 1) throw ArgumentError("check_amahashi: n must be at least 1");
  check_sweep_cap(g, budget, "check_amahashi");
  return sweep_condition(
      g, true,
      [&](const Bitset& mask) { return (long long)odd_component_count(g, mask); },
      [&](int size) { return (2LL * n - 1) * size; });
}

namespace {

long long isolated_count(const Graph& g, const Bitset& removed) {
  long long count = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!removed.test(v) && (g.adj_row(v) - removed).none()) ++count;
  return count;
}

}  // namespace

ConditionReport check_las_vergnas(const Graph& g, int n, const Budget& budget) {
  if (n < 1) throw ArgumentError("check_las_vergnas: n must be at least 1");
  check_sweep_cap(g, budget, "check_las_vergnas");
  return sweep_condition(
      g, true, [&](const Bitset& mask) { return isolated_count(g, mask); },
      [&](int size) { return (long long)n * size; });
}

namespace {

Rat neighborhood_threshold(long long g, long long n) {
  Rat best(g - 2 - 2 * n, 2 * n);
  for (Rat t : {Rat(2 * g - 4, 4 * n + 1), Rat(g - 1, 2 * n + 1),
                Rat(4 * n - 3)})
    if (best < t) best = t;
  return best;
}

}  // namespace

ConditionReport check_neighborhood_condition(const Graph& g, int n) {
  if (n < 1)
    throw ArgumentError("check_neighborhood_condition: n must be at least 1");
  ConditionReport out;
  Rat threshold = neighborhood_threshold(g.order(), n);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      Rat size((g.adj_row(u) | g.adj_row(v)).count());
      if (size <= threshold) {
        out.holds = false;
        out.violator = std::vector<int>{u, v};
        out.lhs = size;
        out.rhs = threshold;
        return out;
      }
    }
  }
  return out;
}

bool threshold_simplifies(long long g, long long n) {
  if (g < 1 || n < 1)
    throw ArgumentError("threshold_simplifies: g and n must be at least 1");
  Rat first(g - 2 - 2 * n, 2 * n);
  return neighborhood_threshold(g, n) == first;
}

Certificate extract_certificate(const Graph& g, int n, const Budget& budget) {
  if (n < 1) throw ArgumentError("extract_certificate: n must be at least 1");
  if (odd_components(g, {}).count > 0)
    throw ArgumentError("extract_certificate: the graph has odd components, "
                        "so no certificate of this shape applies");
  if (has_hn_factor(g, n, budget))
    throw ArgumentError("extract_certificate: the graph has an H_n-factor; "
                        "there is nothing to certify");

  Decomposition d = decompose(g, Prescription(g.order(), h_n_star(n)), budget);
  Certificate cert;
  cert.n = n;
  cert.s_set = d.a_set;
  if (cert.s_set.empty())
    throw TheoremViolation(
        "certificate extraction produced an empty S on " +
        std::to_string(g.order()) +
        " vertices; the decomposition's A-set should be nonempty here");
  // The certified components are those of G[D]. With no C-D edges they are
  // full components of G-S; components living inside C are not part of the
  // certificate (an odd one among them may well have a factor).
  Bitset in_d = Bitset::from(g.order(), d.d_set);
  for (auto& comp :
       components_avoiding(g, Bitset::from(g.order(), cert.s_set))) {
    int inside = 0;
    for (int v : comp)
      if (in_d.test(v)) ++inside;
    if (inside == 0) continue;
    if (inside != int(comp.size()))
      throw TheoremViolation("component " + set_to_string(comp) +
                             " of G-S mixes C and D vertices; there should "
                             "be no C-D edges");
    if (comp.size() % 2 == 0)
      throw TheoremViolation("component " + set_to_string(comp) +
                             " of G[D] has even order");
    cert.odd_comps.push_back(std::move(comp));
  }
  if (int(cert.odd_comps.size()) < 2 * n * int(cert.s_set.size()) + 1)
    throw TheoremViolation(
        "certificate has only " + std::to_string(cert.odd_comps.size()) +
        " certified odd components for |S| = " +
        std::to_string(cert.s_set.size()) + ", below the required " +
        std::to_string(2 * n * int(cert.s_set.size()) + 1));
  for (const auto& comp : cert.odd_comps) {
    auto sub = induced(g, comp);
    bool factorless = !has_hn_factor(sub.graph, n, budget);
    cert.factorless_flags.push_back(factorless);
    if (!factorless)
      throw TheoremViolation("odd component " + set_to_string(comp) +
                             " of the certificate has an H_n-factor");
  }
  return cert;
}

CheckResult verify_corollary_ck(const Graph& g, int n, const Budget& budget) {
  ConditionReport cond = check_cui_kano(g, n, budget);
  if (!cond.holds)
    return CheckResult::vacuous("condition fails at S = " +
                                set_to_string(*cond.violator));
  if (has_hn_factor(g, n, budget)) return CheckResult::pass();
  return CheckResult::fail(
      "the condition holds for every S yet the graph has no H_n-factor");
}

CheckResult verify_odd_order_theorem(const Graph& g, int n,
                                     const Budget& budget) {
  if (g.order() % 2 == 0)
    return CheckResult::skipped("order is even");
  if (components(g).size() != 1)
    return CheckResult::skipped("graph is not connected");
  ConditionReport cond = check_cui_kano_nonempty(g, n, budget);
  if (!cond.holds)
    return CheckResult::skipped("nonempty-set condition fails at S = " +
                                set_to_string(*cond.violator));
  if (has_hn_factor(g, n, budget)) return CheckResult::pass("has a factor");
  if (is_critical(g, Prescription(g.order(), h_n_star(n)), budget))
    return CheckResult::pass("critical");
  return CheckResult::fail(
      "graph has no H_n-factor and is not h_n_star-critical");
}

CheckResult verify_g_minus_v_theorem(const Graph& g, int n,
                                     const Budget& budget) {
  if (odd_components(g, {}).count > 0)
    return CheckResult::skipped("graph has odd components");
  for (int v = 0; v < g.order(); ++v) {
    auto sub = delete_vertices(g, {v});
    if (!has_hn_factor(sub.graph, n, budget))
      return CheckResult::vacuous("G - " + std::to_string(v) +
                                  " has no H_n-factor, hypothesis unmet");
  }
  if (has_hn_factor(g, n, budget)) return CheckResult::pass();
  return CheckResult::fail(
      "every G - v has an H_n-factor but G itself has none");
}

CheckResult verify_kconnected_theorem(const Graph& g, int n, int k, int u,
                                      int v, const Budget& budget) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v)
    throw ArgumentError("verify_kconnected_theorem: bad vertex pair");
  if (g.order() % 2 != 0) return CheckResult::skipped("order is odd");
  if (g.adjacent(u, v))
    return CheckResult::skipped("u and v are adjacent");
  if (!is_k_connected(g, k))
    return CheckResult::skipped("graph is not " + std::to_string(k) +
                                "-connected");
  long long needed = (long long)g.order() - 2LL * n * k;
  long long have = (g.adj_row(u) | g.adj_row(v)).count();
  if (have < needed)
    return CheckResult::skipped("|N(u) u N(v)| = " + std::to_string(have) +
                                " is below " + std::to_string(needed));
  bool before = has_hn_factor(g, n, budget);
  bool after = has_hn_factor(add_edge(g, u, v), n, budget);
  if (before == after) return CheckResult::pass();
  return CheckResult::fail("factor existence flips when adding {" +
                           std::to_string(u) + "," + std::to_string(v) +
                           "}: " + (before ? "lost" : "gained"));
}

Graph gen_apex_cliques(int n) {
  if (n < 1) throw ArgumentError("gen_apex_cliques: n must be at least 1");
  return join(Graph::complete(1), copies(Graph::complete(2 * n + 1), 2 * n + 1));
}

Graph gen_bipartite_sharp(int n, int m) {
  if (n < 1 || m < 1)
    throw ArgumentError("gen_bipartite_sharp: n and m must be at least 1");
  return Graph::complete_bipartite(m, 2 * n * m + 1);
}

Graph gen_clique_independent(int n, int k) {
  if (n < 1 || k < 1)
    throw ArgumentError("gen_clique_independent: n and k must be at least 1");
  if (k % 2 == 0)
    throw ArgumentError("gen_clique_independent: k must be odd");
  return join(Graph::complete(k), Graph::empty(2 * n * k + 1));
}

EpsilonWitness epsilon_witness(int n, const Rat& epsilon) {
  if (n < 1) throw ArgumentError("epsilon_witness: n must be at least 1");
  if (epsilon.num <= 0)
    throw ArgumentError("epsilon_witness: epsilon must be positive");
  // smallest integer strictly above 1/epsilon = den/num
  int m = int(epsilon.den / epsilon.num) + 1;
  EpsilonWitness w;
  w.m = m;
  w.graph = gen_bipartite_sharp(n, m);
  for (int v = 0; v < m; ++v) w.s_set.push_back(v);

  const long long odd = 2LL * n * m + 1;
  OddComponents oc = odd_components(w.graph, w.s_set);
  if (oc.count != odd)
    throw TheoremViolation("epsilon witness: o(G-S) = " +
                           std::to_string(oc.count) + ", expected " +
                           std::to_string(odd));
  // o(G-S) < (2n + epsilon) |S|, compared exactly
  if (!(Rat(odd) < Rat((2 * n * epsilon.den + epsilon.num) * m, epsilon.den)))
    throw TheoremViolation(
        "epsilon witness: the strict inequality o(G-S) < (2n+eps)|S| fails");
  // Factorless by the Las Vergnas route: the violated inequality at S rules
  // out every [1,2n]-factor, and an H_n-factor would be one.
  Bitset s_mask = Bitset::from(w.graph.order(), w.s_set);
  if (!(isolated_count(w.graph, s_mask) > 2LL * n * m))
    throw TheoremViolation(
        "epsilon witness: i(G-S) does not exceed 2n|S|, so factorlessness "
        "is not certified");
  return w;
}

}  // namespace factorlab
