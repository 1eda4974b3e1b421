#include "factorlab/prescription.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "factorlab/errors.hpp"

namespace factorlab {

DegreeSet::DegreeSet(std::vector<int> values) {
  if (values.empty()) throw ArgumentError("degree set must be nonempty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  allowed_ = true;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] > 2) allowed_ = false;
  values_ = std::move(values);
}

bool DegreeSet::contains(int d) const {
  return std::binary_search(values_.begin(), values_.end(), d);
}

std::string DegreeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values_[i]);
  }
  return out + "}";
}

DegreeSet make_degree_set(std::vector<int> values) {
  return DegreeSet(std::move(values));
}

DegreeSet h_o(int n) {
  if (n < 1) throw ArgumentError("h_o: n must be at least 1");
  std::vector<int> v;
  for (int h = 1; h <= 2 * n - 1; h += 2) v.push_back(h);
  return DegreeSet(std::move(v));
}

DegreeSet h_n(int n) {
  if (n < 1) throw ArgumentError("h_n: n must be at least 1");
  std::vector<int> v;
  for (int h = 1; h <= 2 * n - 1; h += 2) v.push_back(h);
  v.push_back(2 * n);
  return DegreeSet(std::move(v));
}

DegreeSet h_n_star(int n) {
  if (n < 1) throw ArgumentError("h_n_star: n must be at least 1");
  std::vector<int> v = {-1};
  for (int h = 1; h <= 2 * n - 1; h += 2) v.push_back(h);
  v.push_back(2 * n);
  return DegreeSet(std::move(v));
}

DegreeSet interval_set(int a, int b) {
  if (a > b) throw ArgumentError("interval_set: empty interval");
  std::vector<int> v;
  for (int h = a; h <= b; ++h) v.push_back(h);
  return DegreeSet(std::move(v));
}

int vertex_deviation(int d, const DegreeSet& set) {
  int best = std::abs(d - set.values()[0]);
  for (int h : set.values()) best = std::min(best, std::abs(d - h));
  return best;
}

Prescription::Prescription(int order, const DegreeSet& uniform) {
  if (order < 0) throw ArgumentError("prescription order must be nonnegative");
  sets_.assign(order, uniform);
}

Prescription::Prescription(std::vector<DegreeSet> per_vertex)
    : sets_(std::move(per_vertex)) {}

const DegreeSet& Prescription::at(int v) const {
  if (v < 0 || v >= order())
    throw ArgumentError("prescription has no vertex " + std::to_string(v));
  return sets_[v];
}

bool Prescription::is_allowed() const {
  for (const auto& s : sets_)
    if (!s.allowed()) return false;
  return true;
}

Prescription Prescription::with_override(int v, const DegreeSet& set) const {
  at(v);  // range check
  std::vector<DegreeSet> sets = sets_;
  sets[v] = set;
  return Prescription(std::move(sets));
}

Prescription Prescription::restricted(
    const std::vector<int>& original_labels) const {
  std::vector<DegreeSet> sets;
  sets.reserve(original_labels.size());
  for (int v : original_labels) sets.push_back(at(v));
  return Prescription(std::move(sets));
}

Prescription shift_by_set(const Prescription& p, const Graph& g,
                          const std::vector<int>& x) {
  if (p.order() != g.order())
    throw ArgumentError("shift_by_set: prescription order " +
                        std::to_string(p.order()) + " does not match graph " +
                        std::to_string(g.order()));
  Bitset xs = Bitset::from(g.order(), x);
  std::vector<DegreeSet> sets;
  sets.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    int e = g.edges_into(v, xs);
    std::vector<int> vals;
    for (int h : p.at(v).values()) vals.push_back(h - e);
    sets.push_back(DegreeSet(std::move(vals)));
  }
  return Prescription(std::move(sets));
}

SpanningSubgraph SpanningSubgraph::from_mask(const Graph& host,
                                             std::uint64_t mask) {
  const int m = host.edge_count();
  if (m > 62)
    throw ArgumentError("spanning subgraphs need a host with at most 62 edges");
  if (m < 64 && (mask >> m) != 0)
    throw ArgumentError("edge mask has bits beyond the host's edge count");
  SpanningSubgraph f;
  f.host = host;
  f.edge_mask = mask;
  f.degrees.assign(host.order(), 0);
  for (int i = 0; i < m; ++i)
    if ((mask >> i) & 1) {
      ++f.degrees[host.edges()[i].first];
      ++f.degrees[host.edges()[i].second];
    }
  return f;
}

SpanningSubgraph SpanningSubgraph::from_edges(const Graph& host,
                                              const std::vector<Edge>& edges) {
  std::uint64_t mask = 0;
  for (auto [u, v] : edges) {
    int i = host.edge_index(u, v);
    if (i < 0)
      throw ArgumentError("edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "} is not in the host graph");
    mask |= std::uint64_t{1} << i;
  }
  return from_mask(host, mask);
}

std::vector<Edge> SpanningSubgraph::chosen_edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < host.edge_count(); ++i)
    if ((edge_mask >> i) & 1) out.push_back(host.edges()[i]);
  return out;
}

int deviation(const SpanningSubgraph& f, const Prescription& p) {
  if (p.order() != f.host.order())
    throw ArgumentError("deviation: prescription does not match host order");
  int total = 0;
  for (int v = 0; v < f.host.order(); ++v)
    total += vertex_deviation(f.degrees[v], p.at(v));
  return total;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& body,
                                const std::string& ctx) {
  std::string t = trim(body);
  if (!t.empty() && t.back() == ',')
    throw ParseError("prescription literal \"" + ctx + "\": empty entry");
  std::vector<int> vals;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ParseError("prescription literal \"" + ctx + "\": empty entry");
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("prescription literal \"" + ctx +
                       "\": bad integer \"" + item + "\"");
    }
    if (pos != item.size())
      throw ParseError("prescription literal \"" + ctx +
                       "\": bad integer \"" + item + "\"");
    vals.push_back(v);
  }
  if (vals.empty())
    throw ParseError("prescription literal \"" + ctx + "\": no values");
  return vals;
}

DegreeSet parse_degree_set_literal(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw ParseError("empty prescription literal");
  auto family_arg = [&](std::size_t prefix_len) {
    std::string num = trim(s.substr(prefix_len));
    std::size_t pos = 0;
    int n;
    try {
      n = std::stoi(num, &pos);
    } catch (const std::exception&) {
      throw ParseError("prescription literal \"" + s + "\": bad n");
    }
    if (pos != num.size() || n < 1)
      throw ParseError("prescription literal \"" + s + "\": bad n");
    return n;
  };
  if (s.rfind("Hn*:", 0) == 0) return h_n_star(family_arg(4));
  if (s.rfind("Hn:", 0) == 0) return h_n(family_arg(3));
  if (s.rfind("Ho:", 0) == 0) return h_o(family_arg(3));
  if (s.front() == '{') {
    if (s.back() != '}')
      throw ParseError("prescription literal \"" + s + "\": missing '}'");
    return DegreeSet(parse_int_list(s.substr(1, s.size() - 2), s));
  }
  if (s.front() == '[') {
    if (s.back() != ']')
      throw ParseError("prescription literal \"" + s + "\": missing ']'");
    auto vals = parse_int_list(s.substr(1, s.size() - 2), s);
    if (vals.size() != 2)
      throw ParseError("prescription literal \"" + s +
                       "\": interval needs exactly two endpoints");
    if (vals[0] > vals[1])
      throw ParseError("prescription literal \"" + s + "\": empty interval");
    return interval_set(vals[0], vals[1]);
  }
  throw ParseError("unrecognized prescription literal \"" + s + "\"");
}

}  // namespace

Prescription parse_prescription_literal(const std::string& text, int order) {
  return Prescription(order, parse_degree_set_literal(text));
}

Prescription apply_prescription_overrides(const Prescription& base,
                                          const std::string& text) {
  Prescription out = base;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("override line " + std::to_string(no) +
                       ": expected \"v: <set>\"");
    std::string head = trim(line.substr(0, colon));
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(head, &pos);
    } catch (const std::exception&) {
      throw ParseError("override line " + std::to_string(no) +
                       ": bad vertex \"" + head + "\"");
    }
    if (pos != head.size())
      throw ParseError("override line " + std::to_string(no) +
                       ": bad vertex \"" + head + "\"");
    if (v < 0 || v >= base.order())
      throw ParseError("override line " + std::to_string(no) + ": vertex " +
                       std::to_string(v) + " out of range for order " +
                       std::to_string(base.order()));
    out = out.with_override(
        v, parse_degree_set_literal(line.substr(colon + 1)));
  }
  return out;
}

}  // namespace factorlab
