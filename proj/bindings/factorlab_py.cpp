// Python module exposing the solver, decomposition, criteria, and harness.
// Thin wrappers only: every object here mirrors a C++ type one to one.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "factorlab/corpus.hpp"
#include "factorlab/criteria.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/json_out.hpp"
#include "factorlab/verify.hpp"

namespace py = pybind11;
using namespace factorlab;

namespace {

std::string graph_repr(const Graph& g) {
  std::ostringstream out;
  out << "<Graph order=" << g.order() << " edges=" << g.edge_count() << ">";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(factorlab, m) {
  m.doc() = "Exact H_n-factor solver, Lovasz decompositions, and theorem "
            "verification";

  // ParseError and ArgumentError map to ValueError, BudgetError to
  // RuntimeError with the bound in the message, TheoremViolation to its own
  // type so harness code can catch the one exception that matters.
  static py::exception<TheoremViolation> theorem_violation(
      m, "TheoremViolation");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const TheoremViolation& e) {
      py::set_error(theorem_violation, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const BudgetError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  // ---- graphs --------------------------------------------------------------
  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("order"),
           py::arg("edges"))
      .def_static("empty", &Graph::empty, py::arg("order"))
      .def_static("complete", &Graph::complete, py::arg("m"))
      .def_static("complete_bipartite", &Graph::complete_bipartite,
                  py::arg("a"), py::arg("b"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("edge_index", &Graph::edge_index, py::arg("u"), py::arg("v"))
      .def("__repr__", &graph_repr);

  m.def("components", &components, py::arg("g"));
  m.def(
      "odd_components",
      [](const Graph& g, const std::vector<int>& s) {
        OddComponents oc = odd_components(g, s);
        return py::make_tuple(oc.count, oc.comps);
      },
      py::arg("g"), py::arg("s") = std::vector<int>{},
      "Returns (count, components) of the odd components of G - S");
  m.def(
      "induced",
      [](const Graph& g, const std::vector<int>& keep) {
        InducedSubgraph s = induced(g, keep);
        return py::make_tuple(s.graph, s.original_labels);
      },
      py::arg("g"), py::arg("keep"),
      "Returns (graph, original_labels) for the induced subgraph");
  m.def(
      "delete_vertices",
      [](const Graph& g, const std::vector<int>& drop) {
        InducedSubgraph s = delete_vertices(g, drop);
        return py::make_tuple(s.graph, s.original_labels);
      },
      py::arg("g"), py::arg("drop"));
  m.def("disjoint_union", &disjoint_union, py::arg("g"), py::arg("h"));
  m.def("copies", &copies, py::arg("g"), py::arg("t"));
  m.def("join", &join, py::arg("g"), py::arg("h"));
  m.def("add_edge", &add_edge, py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("is_k_connected", &is_k_connected, py::arg("g"), py::arg("k"),
        py::arg("max_k") = 8);
  m.def("neighborhood_union", &neighborhood_union, py::arg("g"), py::arg("u"),
        py::arg("v"));

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("emit_graph6", &emit_graph6, py::arg("g"));
  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("emit_edge_list", &emit_edge_list, py::arg("g"));
  m.def("parse_graph_auto", &parse_graph_auto, py::arg("text"));
  m.def("parse_graph_lines", &parse_graph_lines, py::arg("text"));

  // ---- prescriptions -------------------------------------------------------
  py::class_<DegreeSet>(m, "DegreeSet")
      .def(py::init<std::vector<int>>(), py::arg("values"))
      .def_property_readonly("values", &DegreeSet::values)
      .def_property_readonly("allowed", &DegreeSet::allowed)
      .def("min", &DegreeSet::min)
      .def("max", &DegreeSet::max)
      .def("contains", &DegreeSet::contains, py::arg("d"))
      .def("__eq__", [](const DegreeSet& a, const DegreeSet& b) { return a == b; })
      .def("__repr__", &DegreeSet::to_string);

  m.def("h_o", &h_o, py::arg("n"));
  m.def("h_n", &h_n, py::arg("n"));
  m.def("h_n_star", &h_n_star, py::arg("n"));
  m.def("interval_set", &interval_set, py::arg("a"), py::arg("b"));
  m.def("vertex_deviation", &vertex_deviation, py::arg("d"), py::arg("set"));

  py::class_<Prescription>(m, "Prescription")
      .def(py::init<int, const DegreeSet&>(), py::arg("order"),
           py::arg("uniform"))
      .def(py::init<std::vector<DegreeSet>>(), py::arg("per_vertex"))
      .def_property_readonly("order", &Prescription::order)
      .def("at", &Prescription::at, py::arg("v"))
      .def("is_allowed", &Prescription::is_allowed)
      .def("with_override", &Prescription::with_override, py::arg("v"),
           py::arg("set"))
      .def("restricted", &Prescription::restricted,
           py::arg("original_labels"))
      .def("__eq__",
           [](const Prescription& a, const Prescription& b) { return a == b; });

  m.def("shift_by_set", &shift_by_set, py::arg("p"), py::arg("g"),
        py::arg("x"));
  m.def("parse_prescription_literal", &parse_prescription_literal,
        py::arg("text"), py::arg("order"));
  m.def("apply_prescription_overrides", &apply_prescription_overrides,
        py::arg("base"), py::arg("text"));

  py::class_<SpanningSubgraph>(m, "SpanningSubgraph")
      .def_static("from_mask", &SpanningSubgraph::from_mask, py::arg("host"),
                  py::arg("mask"))
      .def_static("from_edges", &SpanningSubgraph::from_edges,
                  py::arg("host"), py::arg("edges"))
      .def_readonly("host", &SpanningSubgraph::host)
      .def_readonly("edge_mask", &SpanningSubgraph::edge_mask)
      .def_readonly("degrees", &SpanningSubgraph::degrees)
      .def("chosen_edges", &SpanningSubgraph::chosen_edges);

  m.def("deviation", &deviation, py::arg("f"), py::arg("p"));

  // ---- solver --------------------------------------------------------------
  py::class_<Budget>(m, "Budget")
      .def(py::init([](int max_edges, int max_vertices,
                       std::int64_t max_millis) {
             return Budget{max_edges, max_vertices, max_millis};
           }),
           py::arg("max_edges") = 25, py::arg("max_vertices") = 20,
           py::arg("max_millis") = 0)
      .def_readwrite("max_edges", &Budget::max_edges)
      .def_readwrite("max_vertices", &Budget::max_vertices)
      .def_readwrite("max_millis", &Budget::max_millis);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("delta", &SolveReport::delta)
      .def_readonly("witness", &SolveReport::witness)
      .def_readonly("degree_sets", &SolveReport::degree_sets)
      .def_readonly("optimum_count", &SolveReport::optimum_count);

  m.def("solve", &solve, py::arg("g"), py::arg("p"),
        py::arg("budget") = Budget{});
  m.def("has_factor", &has_factor, py::arg("g"), py::arg("p"),
        py::arg("budget") = Budget{});
  m.def("find_factor", &find_factor, py::arg("g"), py::arg("p"),
        py::arg("budget") = Budget{});
  m.def("has_hn_factor", &has_hn_factor, py::arg("g"), py::arg("n"),
        py::arg("budget") = Budget{});
  m.def("for_each_optimal", &for_each_optimal, py::arg("g"), py::arg("p"),
        py::arg("delta"), py::arg("visit"), py::arg("budget") = Budget{});

  // ---- decomposition -------------------------------------------------------
  py::enum_<CheckStatus>(m, "CheckStatus")
      .value("Pass", CheckStatus::Pass)
      .value("VacuousPass", CheckStatus::VacuousPass)
      .value("Fail", CheckStatus::Fail)
      .value("Skipped", CheckStatus::Skipped);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("status", &CheckResult::status)
      .def_readonly("detail", &CheckResult::detail)
      .def("ok", &CheckResult::ok)
      .def("__repr__", [](const CheckResult& c) {
        std::string out = std::string("<CheckResult ") + to_label(c.status);
        if (!c.detail.empty()) out += ": " + c.detail;
        return out + ">";
      });

  py::class_<Decomposition>(m, "Decomposition")
      .def_readonly("a_set", &Decomposition::a_set)
      .def_readonly("b_set", &Decomposition::b_set)
      .def_readonly("c_set", &Decomposition::c_set)
      .def_readonly("d_set", &Decomposition::d_set)
      .def_readonly("degree_sets", &Decomposition::degree_sets)
      .def_readonly("prescription", &Decomposition::prescription)
      .def_readonly("delta", &Decomposition::delta);

  m.def("decompose", &decompose, py::arg("g"), py::arg("p"),
        py::arg("budget") = Budget{});
  m.def("delta_by_formula", &delta_by_formula, py::arg("g"), py::arg("p"),
        py::arg("d"));
  m.def("is_critical", &is_critical, py::arg("g"), py::arg("p"),
        py::arg("budget") = Budget{});
  m.def("verify_no_cd_edges", &verify_no_cd_edges, py::arg("g"), py::arg("d"));
  m.def("verify_interval_lemma", &verify_interval_lemma, py::arg("d"));
  m.def("verify_component_criticality", &verify_component_criticality,
        py::arg("g"), py::arg("p"), py::arg("d"), py::arg("budget") = Budget{});
  m.def("verify_vertex_removal", &verify_vertex_removal, py::arg("g"),
        py::arg("p"), py::arg("d"), py::arg("budget") = Budget{});

  // ---- criteria ------------------------------------------------------------
  py::class_<Rat>(m, "Rat")
      .def(py::init<long long, long long>(), py::arg("num"),
           py::arg("den") = 1)
      .def_readonly("num", &Rat::num)
      .def_readonly("den", &Rat::den)
      .def("__eq__", [](const Rat& a, const Rat& b) { return a == b; })
      .def("__lt__", [](const Rat& a, const Rat& b) { return a < b; })
      .def("__le__", [](const Rat& a, const Rat& b) { return a <= b; })
      .def("__repr__", &Rat::to_string);

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("holds", &ConditionReport::holds)
      .def_readonly("violator", &ConditionReport::violator)
      .def_readonly("lhs", &ConditionReport::lhs)
      .def_readonly("rhs", &ConditionReport::rhs)
      .def("__bool__",
           [](const ConditionReport& r) { return r.holds; });

  m.def("check_cui_kano", &check_cui_kano, py::arg("g"), py::arg("n"),
        py::arg("budget") = Budget{});
  m.def("check_cui_kano_nonempty", &check_cui_kano_nonempty, py::arg("g"),
        py::arg("n"), py::arg("budget") = Budget{});
  m.def("check_amahashi", &check_amahashi, py::arg("g"), py::arg("n"),
        py::arg("budget") = Budget{});
  m.def("check_las_vergnas", &check_las_vergnas, py::arg("g"), py::arg("n"),
        py::arg("budget") = Budget{});
  m.def("check_neighborhood_condition", &check_neighborhood_condition,
        py::arg("g"), py::arg("n"));
  m.def("threshold_simplifies", &threshold_simplifies, py::arg("g"),
        py::arg("n"));

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("s_set", &Certificate::s_set)
      .def_readonly("odd_comps", &Certificate::odd_comps)
      .def_readonly("n", &Certificate::n)
      .def_readonly("factorless_flags", &Certificate::factorless_flags);

  m.def("extract_certificate", &extract_certificate, py::arg("g"),
        py::arg("n"), py::arg("budget") = Budget{});
  m.def("verify_corollary_ck", &verify_corollary_ck, py::arg("g"),
        py::arg("n"), py::arg("budget") = Budget{});
  m.def("verify_odd_order_theorem", &verify_odd_order_theorem, py::arg("g"),
        py::arg("n"), py::arg("budget") = Budget{});
  m.def("verify_g_minus_v_theorem", &verify_g_minus_v_theorem, py::arg("g"),
        py::arg("n"), py::arg("budget") = Budget{});
  m.def("verify_kconnected_theorem", &verify_kconnected_theorem, py::arg("g"),
        py::arg("n"), py::arg("k"), py::arg("u"), py::arg("v"),
        py::arg("budget") = Budget{});

  m.def("gen_apex_cliques", &gen_apex_cliques, py::arg("n"));
  m.def("gen_bipartite_sharp", &gen_bipartite_sharp, py::arg("n"),
        py::arg("m"));
  m.def("gen_clique_independent", &gen_clique_independent, py::arg("n"),
        py::arg("k"));

  py::class_<EpsilonWitness>(m, "EpsilonWitness")
      .def_readonly("graph", &EpsilonWitness::graph)
      .def_readonly("s_set", &EpsilonWitness::s_set)
      .def_readonly("m", &EpsilonWitness::m);

  m.def("epsilon_witness", &epsilon_witness, py::arg("n"),
        py::arg("epsilon"));

  // ---- corpus and harness --------------------------------------------------
  m.def("labeled_graphs", &labeled_graphs, py::arg("max_vertices"));
  m.def("sample_gnp", &sample_gnp, py::arg("count"), py::arg("size"),
        py::arg("p"), py::arg("seed"));

  py::class_<PropertyCounters>(m, "PropertyCounters")
      .def_readonly("pass_count", &PropertyCounters::pass)
      .def_readonly("vacuous", &PropertyCounters::vacuous)
      .def_readonly("fail", &PropertyCounters::fail)
      .def_readonly("skipped", &PropertyCounters::skipped)
      .def("total", &PropertyCounters::total);

  py::class_<FailureWitness>(m, "FailureWitness")
      .def_readonly("graph6", &FailureWitness::graph6)
      .def_readonly("property", &FailureWitness::property)
      .def_readonly("detail", &FailureWitness::detail);

  py::class_<VerificationSummary>(m, "VerificationSummary")
      .def_readonly("instances", &VerificationSummary::instances)
      .def_readonly("properties", &VerificationSummary::properties)
      .def_readonly("failures", &VerificationSummary::failures)
      .def("all_ok", &VerificationSummary::all_ok);

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("n", &VerifyOptions::n)
      .def_readwrite("budget", &VerifyOptions::budget)
      .def_readwrite("properties", &VerifyOptions::properties);

  m.def("all_properties", &all_properties);
  m.def("run_verification", &run_verification, py::arg("corpus"),
        py::arg("options") = VerifyOptions{});
  m.def("load_corpus", &load_corpus, py::arg("spec"));

  m.def("solve_json",
        [](const Graph& g, const Prescription& p, const Budget& b) {
          return to_json(solve(g, p, b)).dump(2);
        },
        py::arg("g"), py::arg("p"), py::arg("budget") = Budget{},
        "solve() rendered as the CLI's JSON text");
}
