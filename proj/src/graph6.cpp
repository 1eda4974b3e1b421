#include "factorlab/graph6.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

#include "factorlab/errors.hpp"

namespace factorlab {

namespace {

constexpr char kOffset = 63;
const std::string kHeader = ">>graph6<<";

[[noreturn]] void bad_byte(std::size_t off, const std::string& why) {
  throw ParseError("graph6: " + why + " at byte offset " + std::to_string(off));
}

int value_at(const std::string& s, std::size_t off) {
  if (off >= s.size()) bad_byte(off, "truncated input");
  unsigned char c = s[off];
  if (c < 63 || c > 126) bad_byte(off, "byte outside printable range 63..126");
  return c - kOffset;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  std::size_t base = 0;
  if (s.compare(0, kHeader.size(), kHeader) == 0) base = kHeader.size();
  if (base >= s.size()) throw ParseError("graph6: empty input");

  std::size_t off = base;
  long long n;
  if (value_at(s, off) < 63) {
    n = value_at(s, off);
    ++off;
  } else {
    // 126 escapes to a wider order field
    ++off;
    int bytes = 3;
    if (value_at(s, off) == 63) {  // second 126: six-byte field
      ++off;
      bytes = 6;
    }
    n = 0;
    for (int i = 0; i < bytes; ++i, ++off) n = (n << 6) | value_at(s, off);
  }
  if (n > 1'000'000)
    throw ParseError("graph6: order " + std::to_string(n) +
                     " is beyond what this tool handles");

  const long long nbits = n * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  std::vector<Edge> edges;
  long long bit = 0;
  int u = 0, v = 1;
  for (long long k = 0; k < nbytes; ++k) {
    int val = value_at(s, off + k);
    for (int j = 5; j >= 0; --j, ++bit) {
      bool on = (val >> j) & 1;
      if (bit >= nbits) {
        if (on) bad_byte(off + k, "nonzero padding bit");
        continue;
      }
      if (on) edges.push_back({u, v});
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  if (off + nbytes != s.size()) bad_byte(off + nbytes, "trailing data");
  return Graph(int(n), std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(char(kOffset + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6)
      out.push_back(char(kOffset + ((n >> sh) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int sh = 30; sh >= 0; sh -= 6)
      out.push_back(char(kOffset + ((n >> sh) & 63)));
  }
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(char(kOffset + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(char(kOffset + (acc << (6 - filled))));
  return out;
}

namespace {

// Strips comments and returns the meaningful lines with 1-based numbers.
std::vector<std::pair<int, std::string>> meaningful_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    out.push_back({no, line.substr(a, b - a + 1)});
  }
  return out;
}

bool two_ints(const std::string& s, long long& x, long long& y) {
  std::istringstream in(s);
  std::string tail;
  if (!(in >> x >> y)) return false;
  if (in >> tail) return false;
  return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("edge list: no content");
  long long n, m;
  if (!two_ints(lines[0].second, n, m))
    throw ParseError("edge list: line " + std::to_string(lines[0].first) +
                     ": expected header \"n m\"");
  if (n < 0 || m < 0)
    throw ParseError("edge list: line " + std::to_string(lines[0].first) +
                     ": negative header values");
  if (int(lines.size()) - 1 != m)
    throw ParseError("edge list: expected " + std::to_string(m) +
                     " edge lines, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long u, v;
    if (!two_ints(lines[i].second, u, v))
      throw ParseError("edge list: line " + std::to_string(lines[i].first) +
                       ": expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge list: line " + std::to_string(lines[i].first) +
                       ": endpoint out of range for order " +
                       std::to_string(n));
    if (u == v)
      throw ParseError("edge list: line " + std::to_string(lines[i].first) +
                       ": self-loop");
    edges.push_back({int(u), int(v)});
  }
  try {
    return Graph(int(n), std::move(edges));
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_auto(const std::string& text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("empty graph input");
  long long x, y;
  if (two_ints(lines[0].second, x, y)) return parse_edge_list(text);
  return parse_graph6(lines[0].second);
}

std::vector<Graph> parse_graph_lines(const std::string& text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("empty graph input");
  long long x, y;
  if (two_ints(lines[0].second, x, y)) return {parse_edge_list(text)};
  std::vector<Graph> out;
  for (auto& [no, line] : lines) {
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace factorlab
