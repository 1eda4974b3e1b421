#include "factorlab/solver.hpp"

#include <chrono>
#include <climits>

#include "factorlab/errors.hpp"

namespace factorlab {

namespace {

using Clock = std::chrono::steady_clock;

// Shared state for one search. The bound is the sum over vertices of the
// distance from the interval of still-achievable degrees [deg, deg+rem] to
// the vertex's target set; it is admissible, and once every edge is decided
// it equals the exact deviation of the leaf.
struct Search {
  const Graph& g;
  const Prescription& p;
  int m;
  std::vector<const std::vector<int>*> target;
  std::vector<int> deg, rem, term;
  int bound = 0;

  long long nodes = 0;
  bool timed = false;
  Clock::time_point deadline;

  Search(const Graph& g, const Prescription& p, const Budget& b)
      : g(g), p(p), m(g.edge_count()) {
    if (p.order() != g.order())
      throw ArgumentError("solve: prescription order " +
                          std::to_string(p.order()) +
                          " does not match graph order " +
                          std::to_string(g.order()));
    if (m > 62)
      throw ArgumentError("solve: graphs with more than 62 edges are not "
                          "supported (got " + std::to_string(m) + ")");
    if (m > b.max_edges)
      throw BudgetError("solve: edge count " + std::to_string(m) +
                        " exceeds the budget cap of " +
                        std::to_string(b.max_edges));
    if (b.max_millis > 0) {
      timed = true;
      deadline = Clock::now() + std::chrono::milliseconds(b.max_millis);
    }
    const int n = g.order();
    target.resize(n);
    deg.assign(n, 0);
    rem.assign(n, 0);
    term.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      target[v] = &p.at(v).values();
      rem[v] = g.degree(v);
      term[v] = interval_dev(v, 0, rem[v]);
      bound += term[v];
    }
  }

  int interval_dev(int v, int lo, int hi) const {
    int best = INT_MAX;
    for (int h : *target[v]) {
      if (h < lo) {
        best = std::min(best, lo - h);
      } else if (h > hi) {
        best = std::min(best, h - hi);
        break;  // values ascend, later ones are only farther
      } else {
        return 0;
      }
    }
    return best;
  }

  void refresh(int v) {
    int t = interval_dev(v, deg[v], deg[v] + rem[v]);
    bound += t - term[v];
    term[v] = t;
  }

  void exclude(int u, int v) {
    --rem[u];
    --rem[v];
    refresh(u);
    refresh(v);
  }
  void undo_exclude(int u, int v) {
    ++rem[u];
    ++rem[v];
    refresh(u);
    refresh(v);
  }
  void include(int u, int v) {
    --rem[u];
    --rem[v];
    ++deg[u];
    ++deg[v];
    refresh(u);
    refresh(v);
  }
  void undo_include(int u, int v) {
    ++rem[u];
    ++rem[v];
    --deg[u];
    --deg[v];
    refresh(u);
    refresh(v);
  }

  void tick(int best_known) {
    if (++nodes % 8192 == 0 && timed && Clock::now() > deadline)
      throw BudgetError("solve: wall clock budget exhausted after " +
                            std::to_string(nodes) + " nodes",
                        best_known == INT_MAX ? bound : best_known);
  }
};

struct FullResult {
  int best = INT_MAX;
  std::uint64_t witness = 0;
  long long count = 0;
  std::vector<std::uint64_t> degrees_seen;  // bit d set when degree d occurs
};

// Full optimization: keeps the numerically smallest optimal mask (leaves are
// visited in increasing mask order because the exclude branch goes first and
// edges are decided from the highest index down).
void dfs_full(Search& s, FullResult& r, int idx, std::uint64_t mask) {
  s.tick(r.best);
  if (s.bound > r.best) return;
  if (idx < 0) {
    const int d = s.bound;
    if (d < r.best) {
      r.best = d;
      r.witness = mask;
      r.count = 0;
      std::fill(r.degrees_seen.begin(), r.degrees_seen.end(), 0);
    }
    ++r.count;
    for (int v = 0; v < s.g.order(); ++v)
      r.degrees_seen[v] |= std::uint64_t{1} << s.deg[v];
    return;
  }
  const auto [u, v] = s.g.edges()[idx];
  s.exclude(u, v);
  dfs_full(s, r, idx - 1, mask);
  s.undo_exclude(u, v);
  s.include(u, v);
  dfs_full(s, r, idx - 1, mask | (std::uint64_t{1} << idx));
  s.undo_include(u, v);
}

// Existence: prunes anything that cannot reach deviation 0 and stops at the
// first zero leaf, which is the smallest zero mask by the same ordering.
bool dfs_exists(Search& s, int idx, std::uint64_t mask, std::uint64_t& found) {
  s.tick(0);
  if (s.bound > 0) return false;
  if (idx < 0) {
    found = mask;
    return true;
  }
  const auto [u, v] = s.g.edges()[idx];
  s.exclude(u, v);
  bool ok = dfs_exists(s, idx - 1, mask, found);
  s.undo_exclude(u, v);
  if (ok) return true;
  s.include(u, v);
  ok = dfs_exists(s, idx - 1, mask | (std::uint64_t{1} << idx), found);
  s.undo_include(u, v);
  return ok;
}

void dfs_enumerate(
    Search& s, int delta, int idx, std::uint64_t mask,
    const std::function<void(std::uint64_t, const std::vector<int>&)>& visit) {
  s.tick(delta);
  if (s.bound > delta) return;
  if (idx < 0) {
    if (s.bound == delta) visit(mask, s.deg);
    return;
  }
  const auto [u, v] = s.g.edges()[idx];
  s.exclude(u, v);
  dfs_enumerate(s, delta, idx - 1, mask, visit);
  s.undo_exclude(u, v);
  s.include(u, v);
  dfs_enumerate(s, delta, idx - 1, mask | (std::uint64_t{1} << idx), visit);
  s.undo_include(u, v);
}

void check_vertex_cap(const Graph& g, const Budget& b, const char* what) {
  if (g.order() > b.max_vertices)
    throw BudgetError(std::string(what) + ": order " +
                      std::to_string(g.order()) +
                      " exceeds the budget cap of " +
                      std::to_string(b.max_vertices) + " vertices");
}

}  // namespace

SolveReport solve(const Graph& g, const Prescription& p, const Budget& budget) {
  check_vertex_cap(g, budget, "solve");
  Search s(g, p, budget);
  FullResult r;
  r.degrees_seen.assign(g.order(), 0);
  dfs_full(s, r, s.m - 1, 0);
  SolveReport out;
  out.delta = r.best;
  out.witness = SpanningSubgraph::from_mask(g, r.witness);
  out.optimum_count = r.count;
  out.degree_sets.resize(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int d = 0; d < 64; ++d)
      if ((r.degrees_seen[v] >> d) & 1) out.degree_sets[v].push_back(d);
  return out;
}

bool has_factor(const Graph& g, const Prescription& p, const Budget& budget) {
  check_vertex_cap(g, budget, "has_factor");
  Search s(g, p, budget);
  if (s.bound > 0) return false;
  std::uint64_t found = 0;
  return dfs_exists(s, s.m - 1, 0, found);
}

std::optional<SpanningSubgraph> find_factor(const Graph& g,
                                            const Prescription& p,
                                            const Budget& budget) {
  check_vertex_cap(g, budget, "find_factor");
  Search s(g, p, budget);
  std::uint64_t found = 0;
  if (s.bound > 0 || !dfs_exists(s, s.m - 1, 0, found)) return std::nullopt;
  return SpanningSubgraph::from_mask(g, found);
}

bool has_hn_factor(const Graph& g, int n, const Budget& budget) {
  return has_factor(g, Prescription(g.order(), h_n(n)), budget);
}

void for_each_optimal(
    const Graph& g, const Prescription& p, int delta,
    const std::function<void(std::uint64_t, const std::vector<int>&)>& visit,
    const Budget& budget) {
  check_vertex_cap(g, budget, "for_each_optimal");
  Search s(g, p, budget);
  dfs_enumerate(s, delta, s.m - 1, 0, visit);
}

}  // namespace factorlab
