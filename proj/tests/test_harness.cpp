#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "factorlab/corpus.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/json_out.hpp"
#include "factorlab/verify.hpp"

using namespace factorlab;

TEST_CASE("labeled graph stream") {
  CHECK(labeled_graphs(1).size() == 1);
  CHECK(labeled_graphs(2).size() == 3);
  CHECK(labeled_graphs(4).size() == 75);
  CHECK(labeled_graphs(5).size() == 1099);

  // orders ascend and within an order the edge mask ascends, so the stream
  // starts empty and ends complete
  auto all = labeled_graphs(3);
  CHECK(all.front().order() == 1);
  CHECK(all.back().order() == 3);
  CHECK(all.back().edge_count() == 3);

  CHECK_THROWS_AS(labeled_graphs(0), ArgumentError);
  CHECK_THROWS_AS(labeled_graphs(7), ArgumentError);
}

TEST_CASE("random corpus sampling") {
  auto a = sample_gnp(5, 8, 0.5, 42);
  auto b = sample_gnp(5, 8, 0.5, 42);
  REQUIRE(a.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(a[i].edges() == b[i].edges());

  auto c = sample_gnp(5, 8, 0.5, 43);
  bool any_diff = false;
  for (int i = 0; i < 5; ++i) any_diff |= (a[i].edges() != c[i].edges());
  CHECK(any_diff);

  for (const Graph& g : sample_gnp(3, 6, 0.0, 1)) CHECK(g.edge_count() == 0);
  for (const Graph& g : sample_gnp(3, 6, 1.0, 1)) CHECK(g.edge_count() == 15);

  CHECK_THROWS_AS(sample_gnp(-1, 4, 0.5, 0), ArgumentError);
  CHECK_THROWS_AS(sample_gnp(1, -4, 0.5, 0), ArgumentError);
  CHECK_THROWS_AS(sample_gnp(1, 4, 1.5, 0), ArgumentError);
}

TEST_CASE("verification over the small exhaustive corpus") {
  VerifyOptions opt;
  VerificationSummary s = run_verification(labeled_graphs(4), opt);
  CHECK(s.instances == 75);
  CHECK(s.all_ok());
  // the default selection is every property except opt-in sharpness
  CHECK(s.properties.size() == all_properties().size() - 1);
  CHECK_FALSE(s.properties.count("sharpness"));
  for (const auto& [name, c] : s.properties) {
    INFO(name);
    CHECK(c.total() == s.instances);
    CHECK(c.fail == 0);
  }
  // K_3 meets the isolated-vertex bound without a [1,1]-factor, so at n = 1
  // the las-vergnas property records it as vacuous rather than failing
  CHECK(s.properties.at("las-vergnas").vacuous > 0);
}

TEST_CASE("sharpness corpus passes and general graphs fail it") {
  std::vector<Graph> sharp;
  for (int m = 1; m <= 3; ++m) sharp.push_back(gen_bipartite_sharp(1, m));
  VerifyOptions opt;
  opt.properties = {"sharpness"};
  VerificationSummary ok = run_verification(sharp, opt);
  CHECK(ok.instances == 3);
  CHECK(ok.all_ok());
  CHECK(ok.properties.at("sharpness").pass == 3);

  VerificationSummary bad = run_verification({Graph::complete(2)}, opt);
  CHECK_FALSE(bad.all_ok());
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].graph6 == "A_");
  CHECK(bad.failures[0].property == "sharpness");
  CHECK(bad.properties.at("sharpness").fail == 1);
}

TEST_CASE("verification options") {
  VerifyOptions opt;
  opt.properties = {"no-such-property"};
  CHECK_THROWS_AS(run_verification({Graph::complete(2)}, opt), ArgumentError);

  // a budget too small to decompose shows up as skips, not crashes
  VerifyOptions tight;
  tight.budget = Budget{3, 24, 0};
  tight.properties = {"delta-formula"};
  VerificationSummary s = run_verification({Graph::complete(4)}, tight);
  CHECK(s.properties.at("delta-formula").skipped == 1);
  CHECK(s.all_ok());
}

TEST_CASE("corpus specs") {
  CHECK(load_corpus("exhaustive:4").size() == 75);
  CHECK(load_corpus("exhaustive:v<=3").size() == 11);

  auto r = load_corpus("random:5,8,0.5,seed=42");
  auto direct = sample_gnp(5, 8, 0.5, 42);
  REQUIRE(r.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(r[i].edges() == direct[i].edges());
  CHECK(load_corpus("random:2,6,0.3,7").size() == 2);

  std::string path = "/tmp/factorlab_corpus_test.g6";
  {
    std::ofstream out(path);
    out << "A_\n# comment\nC~\n";
  }
  auto file = load_corpus(path);
  REQUIRE(file.size() == 2);
  CHECK(file[1].order() == 4);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_corpus("exhaustive:many"), ParseError);
  CHECK_THROWS_AS(load_corpus("random:5,8,0.5"), ParseError);
  CHECK_THROWS_AS(load_corpus("random:a,b,c,d"), ParseError);
  CHECK_THROWS_AS(load_corpus("random:5,8,1.5,42"), ArgumentError);
  CHECK_THROWS_AS(load_corpus("/no/such/file.g6"), ParseError);
  CHECK_THROWS_AS(load_corpus("exhaustive:9"), ArgumentError);
}

TEST_CASE("json report shapes") {
  auto solved = to_json(solve(Graph::complete(2), Prescription(2, h_n(1))));
  CHECK(solved["delta"] == 0);
  CHECK(solved["witness_edges"].size() == 1);
  CHECK(solved["witness_edges"][0] == nlohmann::json({0, 1}));
  CHECK(solved["degree_sets"] == nlohmann::json({{1}, {1}}));
  CHECK(solved["optimum_count"] == 1);

  Graph star = Graph::complete_bipartite(1, 3);
  Prescription ps(4, h_n_star(1));
  auto dec = to_json(star, decompose(star, ps));
  CHECK(dec["a_set"] == nlohmann::json({0}));
  CHECK(dec["d_set"] == nlohmann::json({1, 2, 3}));
  CHECK(dec["delta_search"] == 1);
  CHECK(dec["delta_formula"] == 1);
  REQUIRE(dec["vertices"].size() == 4);
  CHECK(dec["vertices"][0]["prescribed"] == nlohmann::json({-1, 1, 2}));
  CHECK(dec["vertices"][1]["degree_set"] == nlohmann::json({0, 1}));

  Graph two_stars = disjoint_union(star, star);
  auto cert = to_json(two_stars, extract_certificate(two_stars, 1));
  CHECK(cert["n"] == 1);
  CHECK(cert["s_set"] == nlohmann::json({0, 4}));
  CHECK(cert["odd_components"].size() == 6);
  CHECK(cert["checks"]["inequality_lhs"] == 6);
  CHECK(cert["checks"]["inequality_rhs"] == 5);
  CHECK(cert["checks"]["per_component_factorless"].size() == 6);

  auto cond = to_json(check_cui_kano(star, 1));
  CHECK(cond["holds"] == false);
  CHECK(cond["violator"] == nlohmann::json({0}));
  CHECK(cond["lhs"] == "3");
  CHECK(cond["rhs"] == "2");
  auto held = to_json(check_cui_kano(Graph::complete(4), 1));
  CHECK(held["holds"] == true);
  CHECK_FALSE(held.contains("violator"));

  auto check = to_json(CheckResult::vacuous("why"));
  CHECK(check["status"] == "vacuous");
  CHECK(check["detail"] == "why");

  VerifyOptions opt;
  opt.properties = {"sharpness"};
  auto sum = to_json(run_verification({Graph::complete(2)}, opt));
  CHECK(sum["instances"] == 1);
  CHECK(sum["properties"]["sharpness"]["fail"] == 1);
  REQUIRE(sum["failures"].size() == 1);
  CHECK(sum["failures"][0]["graph6"] == "A_");
}
