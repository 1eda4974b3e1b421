#include "factorlab/json_out.hpp"

#include "factorlab/graph6.hpp"

namespace factorlab {

using nlohmann::json;

json to_json(const SolveReport& r) {
  json edges = json::array();
  for (auto [u, v] : r.witness.chosen_edges()) edges.push_back({u, v});
  return {{"delta", r.delta},
          {"witness_edges", edges},
          {"degree_sets", r.degree_sets},
          {"optimum_count", r.optimum_count}};
}

json to_json(const Graph& g, const Decomposition& d) {
  json sets = json::array();
  for (int v = 0; v < g.order(); ++v) {
    json hv = json::array();
    for (int h : d.prescription.at(v).values()) hv.push_back(h);
    sets.push_back({{"vertex", v},
                    {"degree_set", d.degree_sets[v]},
                    {"prescribed", hv}});
  }
  return {{"a_set", d.a_set},
          {"b_set", d.b_set},
          {"c_set", d.c_set},
          {"d_set", d.d_set},
          {"vertices", sets},
          {"delta_search", d.delta},
          {"delta_formula", delta_by_formula(g, d.prescription, d)}};
}

json to_json(const Graph& g, const Certificate& c) {
  (void)g;
  return {{"n", c.n},
          {"s_set", c.s_set},
          {"odd_components", c.odd_comps},
          {"checks",
           {{"inequality_lhs", c.odd_comps.size()},
            {"inequality_rhs", 2 * c.n * c.s_set.size() + 1},
            {"per_component_factorless", c.factorless_flags}}}};
}

json to_json(const ConditionReport& r) {
  json out = {{"holds", r.holds}};
  if (r.violator) {
    out["violator"] = *r.violator;
    out["lhs"] = r.lhs.to_string();
    out["rhs"] = r.rhs.to_string();
  }
  return out;
}

json to_json(const CheckResult& r) {
  return {{"status", to_label(r.status)}, {"detail", r.detail}};
}

json to_json(const VerificationSummary& s) {
  json props = json::object();
  for (const auto& [name, c] : s.properties)
    props[name] = {{"pass", c.pass},
                   {"vacuous", c.vacuous},
                   {"fail", c.fail},
                   {"skipped", c.skipped}};
  json fails = json::array();
  for (const auto& f : s.failures)
    fails.push_back({{"graph6", f.graph6},
                     {"property", f.property},
                     {"detail", f.detail}});
  return {{"instances", s.instances},
          {"properties", props},
          {"failures", fails}};
}

}  // namespace factorlab
