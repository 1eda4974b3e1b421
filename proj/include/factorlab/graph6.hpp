#pragma once

#include <string>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

// graph6: McKay's printable encoding. Order field N(n), then the upper
// triangle in column-major order (x(0,1), x(0,2), x(1,2), ...), six bits per
// byte added to 63, MSB first, zero padded. Parse errors name the byte
// offset; nonzero padding bits and trailing bytes are rejected so that
// emit(parse(s)) == s holds for everything accepted.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Plain edge-list text: first meaningful line "n m" (order and edge count),
// then m lines "u v" with 0-based endpoints. Blank lines and '#' comments
// are ignored anywhere.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Accepts either format, deciding by the shape of the first meaningful line
// (two decimal numbers means edge list; anything else is treated as graph6).
Graph parse_graph_auto(const std::string& text);

// A corpus file: one graph6 string per line, or a single edge-list graph.
std::vector<Graph> parse_graph_lines(const std::string& text);

}  // namespace factorlab
