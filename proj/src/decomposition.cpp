#include "factorlab/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "factorlab/errors.hpp"

namespace factorlab {

const char* to_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::VacuousPass: return "vacuous";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
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

}  // namespace

Decomposition decompose(const Graph& g, const Prescription& p,
                        const Budget& budget) {
  if (!p.is_allowed())
    throw ArgumentError(
        "decompose: prescription has a gap wider than 2; the decomposition "
        "theory needs allowed sets");
  SolveReport rep = solve(g, p, budget);
  Decomposition d;
  d.prescription = p;
  d.delta = rep.delta;
  d.degree_sets = std::move(rep.degree_sets);
  for (int v = 0; v < g.order(); ++v) {
    const auto& i_set = d.degree_sets[v];
    const DegreeSet& h = p.at(v);
    bool inside = std::all_of(i_set.begin(), i_set.end(),
                              [&](int x) { return h.contains(x); });
    if (inside)
      d.c_set.push_back(v);
    else if (i_set.front() >= h.max())
      d.a_set.push_back(v);
    else if (i_set.back() <= h.min())
      d.b_set.push_back(v);
    else
      d.d_set.push_back(v);
  }
  return d;
}

namespace {

void check_matches(const Graph& g, const Prescription& p,
                   const Decomposition& d, const char* what) {
  if (p.order() != g.order())
    throw ArgumentError(std::string(what) +
                        ": prescription order does not match the graph");
  if (!(d.prescription == p))
    throw ArgumentError(std::string(what) +
                        ": decomposition was computed for a different "
                        "prescription");
  std::vector<char> seen(g.order(), 0);
  auto mark = [&](const std::vector<int>& s) {
    for (int v : s) {
      if (v < 0 || v >= g.order())
        throw ArgumentError(std::string(what) +
                            ": decomposition names vertex " +
                            std::to_string(v) + " outside the graph");
      if (seen[v]++)
        throw ArgumentError(std::string(what) +
                            ": decomposition repeats vertex " +
                            std::to_string(v));
    }
  };
  mark(d.a_set);
  mark(d.b_set);
  mark(d.c_set);
  mark(d.d_set);
  for (int v = 0; v < g.order(); ++v)
    if (!seen[v])
      throw ArgumentError(std::string(what) +
                          ": decomposition misses vertex " +
                          std::to_string(v));
}

}  // namespace

int delta_by_formula(const Graph& g, const Prescription& p,
                     const Decomposition& d) {
  check_matches(g, p, d, "delta_by_formula");
  int total = int(components(induced(g, d.d_set).graph).size());
  for (int v : d.b_set) total += p.at(v).min();
  for (int v : d.a_set) total -= p.at(v).max();
  if (!d.b_set.empty()) {
    Bitset a_mask = Bitset::from(g.order(), d.a_set);
    for (int v : d.b_set)
      total -= g.degree(v) - g.edges_into(v, a_mask);
  }
  return total;
}

bool is_critical(const Graph& g, const Prescription& p, const Budget& budget) {
  if (g.order() == 0 || components(g).size() != 1) return false;
  Decomposition d = decompose(g, p, budget);
  // D = V forces delta = c(D) = 1 when the theory holds; checking both
  // keeps a structural bug from slipping through as "critical"
  return d.delta == 1 && int(d.d_set.size()) == g.order();
}

CheckResult verify_no_cd_edges(const Graph& g, const Decomposition& d) {
  if (d.c_set.empty() || d.d_set.empty())
    return CheckResult::vacuous("C or D is empty");
  Bitset dd = Bitset::from(g.order(), d.d_set);
  for (int c : d.c_set) {
    if (g.adj_row(c).intersects(dd)) {
      int witness = (g.adj_row(c) & dd).to_vector().front();
      return CheckResult::fail("edge {" + std::to_string(c) + "," +
                               std::to_string(witness) + "} joins C and D");
    }
  }
  return CheckResult::pass();
}

CheckResult verify_interval_lemma(const Decomposition& d) {
  if (d.d_set.empty()) return CheckResult::vacuous("D is empty");
  for (int v : d.d_set) {
    const auto& i_set = d.degree_sets[v];
    const DegreeSet& h = d.prescription.at(v);
    int lo = i_set.front(), hi = i_set.back();
    for (int x = lo; x < hi; ++x) {
      if (h.contains(x) && h.contains(x + 1))
        return CheckResult::fail(
            "vertex " + std::to_string(v) + ": consecutive values " +
            std::to_string(x) + "," + std::to_string(x + 1) +
            " lie in H inside [min I, max I]");
    }
  }
  return CheckResult::pass();
}

CheckResult verify_component_criticality(const Graph& g, const Prescription& p,
                                         const Decomposition& d,
                                         const Budget& budget) {
  check_matches(g, p, d, "verify_component_criticality");
  if (d.d_set.empty()) return CheckResult::vacuous("D is empty");
  Prescription shifted = shift_by_set(p, g, d.b_set);
  auto sub = induced(g, d.d_set);
  for (const auto& comp_local : components(sub.graph)) {
    std::vector<int> comp_original;
    for (int v : comp_local) comp_original.push_back(sub.original_labels[v]);
    auto t = induced(g, comp_original);
    Prescription h_prime = shifted.restricted(t.original_labels);
    SolveReport rep = solve(t.graph, h_prime, budget);
    if (rep.delta != 1)
      return CheckResult::fail("component " + set_to_string(comp_original) +
                               " has deviation " + std::to_string(rep.delta) +
                               " under the shifted prescription, not 1");
    bool bad = false;
    std::string bad_detail;
    for_each_optimal(
        t.graph, h_prime, 1,
        [&](std::uint64_t mask, const std::vector<int>& degs) {
          if (bad) return;
          int deviating = 0;
          for (int v = 0; v < t.graph.order(); ++v)
            if (vertex_deviation(degs[v], h_prime.at(v)) > 0) ++deviating;
          if (deviating != 1) {
            bad = true;
            bad_detail = "component " + set_to_string(comp_original) +
                         ": optimal subgraph mask " + std::to_string(mask) +
                         " has " + std::to_string(deviating) +
                         " deviating vertices";
          }
        },
        budget);
    if (bad) return CheckResult::fail(bad_detail);
  }
  return CheckResult::pass();
}

CheckResult verify_vertex_removal(const Graph& g, const Prescription& p,
                                  const Decomposition& d,
                                  const Budget& budget) {
  check_matches(g, p, d, "verify_vertex_removal");
  if (d.a_set.empty()) return CheckResult::vacuous("A is empty");
  for (int a : d.a_set) {
    auto sub = delete_vertices(g, {a});
    Decomposition d2 =
        decompose(sub.graph, p.restricted(sub.original_labels), budget);
    auto relabel = [&](const std::vector<int>& local) {
      std::vector<int> out;
      for (int v : local) out.push_back(sub.original_labels[v]);
      return out;
    };
    std::vector<int> expect_a;
    for (int v : d.a_set)
      if (v != a) expect_a.push_back(v);
    std::vector<int> got_a = relabel(d2.a_set);
    std::vector<int> got_b = relabel(d2.b_set);
    std::vector<int> got_c = relabel(d2.c_set);
    std::vector<int> got_d = relabel(d2.d_set);
    if (got_a != expect_a || got_b != d.b_set || got_c != d.c_set ||
        got_d != d.d_set) {
      std::ostringstream why;
      why << "removing vertex " << a << " gave (A,B,C,D) = ("
          << set_to_string(got_a) << "," << set_to_string(got_b) << ","
          << set_to_string(got_c) << "," << set_to_string(got_d)
          << "), expected (" << set_to_string(expect_a) << ","
          << set_to_string(d.b_set) << "," << set_to_string(d.c_set) << ","
          << set_to_string(d.d_set) << ")";
      return CheckResult::fail(why.str());
    }
  }
  return CheckResult::pass();
}

}  // namespace factorlab
