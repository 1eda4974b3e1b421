#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "factorlab/criteria.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/json_out.hpp"
#include "factorlab/verify.hpp"

namespace fl = factorlab;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw fl::ParseError("cannot read \"" + path + "\"");
  std::stringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// Budget flags shared by every graph-taking subcommand. max_millis starts at
// -1 ("not given") so FACTORLAB_MAX_MILLIS can fill the wall clock in; an
// explicit --max-millis always wins over the environment.
struct BudgetFlags {
  int max_edges;
  int max_vertices;
  long long max_millis = -1;

  explicit BudgetFlags(const fl::Budget& defaults)
      : max_edges(defaults.max_edges), max_vertices(defaults.max_vertices) {}

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-edges", max_edges, "edge cap for exact searches")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-vertices", max_vertices, "vertex cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-millis", max_millis,
                    "wall clock cap in ms, 0 = unlimited (default from "
                    "FACTORLAB_MAX_MILLIS, else 0)")
        ->check(CLI::NonNegativeNumber);
  }

  fl::Budget resolve() const {
    fl::Budget b;
    b.max_edges = max_edges;
    b.max_vertices = max_vertices;
    b.max_millis = 0;
    if (max_millis >= 0) {
      b.max_millis = max_millis;
    } else if (const char* env = std::getenv("FACTORLAB_MAX_MILLIS")) {
      std::string text(env);
      std::size_t pos = 0;
      long long v = -1;
      try {
        v = std::stoll(text, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != text.size() || v < 0)
        throw fl::ArgumentError(
            "FACTORLAB_MAX_MILLIS is not a nonnegative integer: \"" + text +
            "\"");
      b.max_millis = v;
    }
    return b;
  }
};

std::string brace_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::string vertex_list(const std::vector<int>& v) {
  if (v.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

fl::Prescription build_prescription(const fl::Graph& g, int n,
                                    const std::string& literal,
                                    const std::string& override_path) {
  std::string lit = literal.empty() ? "Hn:" + std::to_string(n) : literal;
  fl::Prescription p = fl::parse_prescription_literal(lit, g.order());
  if (!override_path.empty())
    p = fl::apply_prescription_overrides(p, slurp(override_path));
  return p;
}

int run_solve(const fl::Graph& g, const fl::Prescription& p,
              const fl::Budget& budget, bool json) {
  fl::SolveReport r = fl::solve(g, p, budget);
  if (json) {
    std::cout << fl::to_json(r).dump(2) << "\n";
  } else {
    std::cout << "delta: " << r.delta << "\n";
    std::cout << "optima: " << r.optimum_count << "\n";
    std::string w;
    for (auto [u, v] : r.witness.chosen_edges()) {
      if (!w.empty()) w += " ";
      w += std::to_string(u) + "-" + std::to_string(v);
    }
    std::cout << "witness: " << (w.empty() ? "(no edges)" : w) << "\n";
    for (int v = 0; v < g.order(); ++v)
      std::cout << "I(" << v << ") = " << brace_set(r.degree_sets[v]) << "\n";
  }
  return r.delta == 0 ? 0 : 1;
}

int run_decompose(const fl::Graph& g, const fl::Prescription& p,
                  const fl::Budget& budget, bool json) {
  fl::Decomposition d = fl::decompose(g, p, budget);
  if (json) {
    std::cout << fl::to_json(g, d).dump(2) << "\n";
  } else {
    std::cout << "delta: " << d.delta << " (formula "
              << fl::delta_by_formula(g, p, d) << ")\n";
    std::cout << "A: " << vertex_list(d.a_set) << "\n";
    std::cout << "B: " << vertex_list(d.b_set) << "\n";
    std::cout << "C: " << vertex_list(d.c_set) << "\n";
    std::cout << "D: " << vertex_list(d.d_set) << "\n";
    for (int v = 0; v < g.order(); ++v)
      std::cout << "I(" << v << ") = " << brace_set(d.degree_sets[v]) << "\n";
  }
  return 0;
}

int run_certify(const fl::Graph& g, int n, const fl::Budget& budget,
                bool json) {
  fl::Certificate c = fl::extract_certificate(g, n, budget);
  if (json) {
    std::cout << fl::to_json(g, c).dump(2) << "\n";
  } else {
    std::cout << "S: " << vertex_list(c.s_set) << "\n";
    std::cout << "odd components: " << c.odd_comps.size() << " (bound 2n|S| = "
              << 2LL * n * (long long)c.s_set.size() << ")\n";
    for (std::size_t i = 0; i < c.odd_comps.size(); ++i)
      std::cout << "component " << i + 1 << ": "
                << vertex_list(c.odd_comps[i]) << "\n";
  }
  return 0;
}

int run_check(const std::string& kind, const fl::Graph& g, int n,
              const fl::Budget& budget, bool json) {
  fl::ConditionReport r;
  if (kind == "ck")
    r = fl::check_cui_kano(g, n, budget);
  else if (kind == "ck-nonempty")
    r = fl::check_cui_kano_nonempty(g, n, budget);
  else if (kind == "amahashi")
    r = fl::check_amahashi(g, n, budget);
  else if (kind == "las-vergnas")
    r = fl::check_las_vergnas(g, n, budget);
  else
    r = fl::check_neighborhood_condition(g, n);
  if (json) {
    std::cout << fl::to_json(r).dump(2) << "\n";
  } else {
    std::cout << kind << " (n = " << n
              << "): " << (r.holds ? "holds" : "violated") << "\n";
    if (r.violator) {
      std::cout << "violator: " << vertex_list(*r.violator) << "\n";
      std::cout << "lhs: " << r.lhs.to_string() << "\n";
      std::cout << "rhs: " << r.rhs.to_string() << "\n";
    }
  }
  return r.holds ? 0 : 1;
}

int run_gen(const std::string& family, int n, int m, int k) {
  fl::Graph g;
  if (family == "apex-cliques")
    g = fl::gen_apex_cliques(n);
  else if (family == "bipartite-sharp")
    g = fl::gen_bipartite_sharp(n, m);
  else
    g = fl::gen_clique_independent(n, k);
  std::cout << fl::emit_graph6(g) << "\n";
  return 0;
}

int run_verify(std::string spec, std::uint64_t seed, bool seed_given,
               const fl::VerifyOptions& opt, bool json) {
  if (seed_given) {
    if (spec.rfind("random:", 0) != 0)
      throw fl::ArgumentError("--seed only applies to random: corpora");
    if (std::count(spec.begin(), spec.end(), ',') != 2)
      throw fl::ArgumentError(
          "corpus spec already carries a seed; drop --seed or the seed field");
    spec += ",seed=" + std::to_string(seed);
  }
  std::vector<fl::Graph> corpus = fl::load_corpus(spec);
  fl::VerificationSummary s = fl::run_verification(corpus, opt);
  if (json) {
    std::cout << fl::to_json(s).dump(2) << "\n";
  } else {
    std::cout << "instances: " << s.instances << "\n";
    for (const auto& [name, c] : s.properties)
      std::cout << std::left << std::setw(16) << name << std::right << " pass "
                << std::setw(6) << c.pass << "  vacuous " << std::setw(6)
                << c.vacuous << "  fail " << std::setw(6) << c.fail
                << "  skipped " << std::setw(6) << c.skipped << "\n";
    for (const auto& f : s.failures)
      std::cout << "FAIL " << f.graph6 << " " << f.property << ": " << f.detail
                << "\n";
    if (s.all_ok())
      std::cout << "all ok\n";
    else
      std::cout << s.failures.size() << " failures\n";
  }
  return s.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and verification toolkit for H_n-factors"};
  app.require_subcommand(1);

  std::string graph_path, prescription, prescription_file, corpus_spec;
  std::string check_kind, gen_family;
  int n = 1, gen_m = 1, gen_k = 1;
  std::uint64_t seed = 0;
  bool json = false;
  std::vector<std::string> properties;

  BudgetFlags solve_budget{fl::Budget{}}, decompose_budget{fl::Budget{}},
      certify_budget{fl::Budget{}}, check_budget{fl::Budget{}},
      verify_budget{fl::VerifyOptions{}.budget};

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path,
                    "graph file (graph6 or edge list), - for stdin")
        ->required();
  };
  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "family parameter n of H_n")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "emit JSON instead of text");
  };

  CLI::App* solve = app.add_subcommand(
      "solve", "exact minimum deviation and optimal-degree sets");
  add_graph(solve);
  add_n(solve);
  add_json(solve);
  solve->add_option("--prescription", prescription,
                    "literal: Hn:2, Ho:2, Hn*:2, {1,3,4}, [1,4] "
                    "(default Hn:<n>)");
  solve->add_option("--prescription-file", prescription_file,
                    "per-vertex overrides, lines \"v: <literal>\"");
  solve_budget.attach(solve);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "canonical (A,B,C,D) vertex partition");
  add_graph(decompose);
  add_n(decompose);
  add_json(decompose);
  decompose->add_option("--prescription", prescription,
                        "literal (default Hn:<n>)");
  decompose->add_option("--prescription-file", prescription_file,
                        "per-vertex overrides, lines \"v: <literal>\"");
  decompose_budget.attach(decompose);

  CLI::App* certify = app.add_subcommand(
      "certify", "extract and validate a factorless-ness certificate");
  add_graph(certify);
  add_n(certify);
  add_json(certify);
  certify_budget.attach(certify);

  CLI::App* check = app.add_subcommand("check", "sweep a classical condition");
  check->add_option("kind", check_kind, "condition to sweep")
      ->required()
      ->check(CLI::IsMember(
          {"ck", "ck-nonempty", "amahashi", "las-vergnas", "neighborhood"}));
  add_graph(check);
  add_n(check);
  add_json(check);
  check_budget.attach(check);

  CLI::App* gen = app.add_subcommand("gen", "emit an extremal family member");
  gen->add_option("family", gen_family, "family to generate")
      ->required()
      ->check(CLI::IsMember(
          {"apex-cliques", "bipartite-sharp", "clique-independent"}));
  add_n(gen);
  gen->add_option("--m", gen_m, "bipartite-sharp side size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--k", gen_k, "clique-independent clique size (odd)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "run property checks over a whole corpus");
  verify->add_option("--corpus", corpus_spec,
                     "exhaustive:N, exhaustive:v<=N, random:count,size,p,seed "
                     "or a file of graph6 lines / one edge list")
      ->required();
  add_n(verify);
  add_json(verify);
  verify->add_option("--seed", seed,
                     "seed for a random: corpus given without one");
  verify->add_option("--properties", properties,
                     "property subset (default: all except sharpness)")
      ->delimiter(',');
  verify_budget.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      fl::Graph g = fl::parse_graph_auto(slurp(graph_path));
      fl::Prescription p =
          build_prescription(g, n, prescription, prescription_file);
      return run_solve(g, p, solve_budget.resolve(), json);
    }
    if (decompose->parsed()) {
      fl::Graph g = fl::parse_graph_auto(slurp(graph_path));
      fl::Prescription p =
          build_prescription(g, n, prescription, prescription_file);
      return run_decompose(g, p, decompose_budget.resolve(), json);
    }
    if (certify->parsed()) {
      fl::Graph g = fl::parse_graph_auto(slurp(graph_path));
      return run_certify(g, n, certify_budget.resolve(), json);
    }
    if (check->parsed()) {
      fl::Graph g = fl::parse_graph_auto(slurp(graph_path));
      return run_check(check_kind, g, n, check_budget.resolve(), json);
    }
    if (gen->parsed()) return run_gen(gen_family, n, gen_m, gen_k);
    fl::VerifyOptions opt;
    opt.n = n;
    opt.budget = verify_budget.resolve();
    opt.properties = properties;
    return run_verify(corpus_spec, seed, verify->count("--seed") > 0, opt,
                      json);
  } catch (const fl::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const fl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
