#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "factorlab/criteria.hpp"

namespace factorlab {

struct PropertyCounters {
  std::int64_t pass = 0, vacuous = 0, fail = 0, skipped = 0;
  std::int64_t total() const { return pass + vacuous + fail + skipped; }
};

struct FailureWitness {
  std::string graph6;
  std::string property;
  std::string detail;
};

struct VerificationSummary {
  std::int64_t instances = 0;
  std::map<std::string, PropertyCounters> properties;
  std::vector<FailureWitness> failures;
  bool all_ok() const { return failures.empty(); }
};

// Property names accepted by run_verification, in canonical order:
// delta-formula, cd-edges, interval, criticality, vertex-removal,
// certificates, corollary-ck, amahashi, las-vergnas, neighborhood,
// odd-order, g-minus-v, sharpness. The lemma and formula properties use the
// prescription h_n_star(n). las-vergnas tests the full equivalence from
// n = 2 up but only necessity at n = 1, where the classical statement fails
// (K_3). sharpness asserts "no H_n-factor", which only makes sense on
// corpora from the sharp generators, so an empty property selection runs
// everything except it.
std::vector<std::string> all_properties();

struct VerifyOptions {
  int n = 1;
  Budget budget{62, 24, 0};  // desk-scale sweeps; callers may tighten
  std::vector<std::string> properties;  // empty means all
};

VerificationSummary run_verification(const std::vector<Graph>& corpus,
                                     const VerifyOptions& options);

// Corpus specs: "exhaustive:N" or "exhaustive:v<=N" (all labeled graphs on
// up to N vertices), "random:count,size,p,seed" (seed optionally written
// "seed=..."), or a path to a file of graph6 lines / one edge list.
std::vector<Graph> load_corpus(const std::string& spec);

}  // namespace factorlab
