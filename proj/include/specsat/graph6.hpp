// graph6.hpp — graph6 text encoding (one graph per line).
//
// Layout: N(n) followed by the upper triangle of the adjacency matrix in
// column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
// byte, most significant first, each byte offset by 63. N(n) is the single byte
// n+63 for n <= 62 and the four bytes 126, then 18 bits of n, for larger n.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "specsat/graph.hpp"

namespace specsat {

inline constexpr int kGraph6MaxVertices = 258047;

std::string emit_graph6(const Graph& g);

/// Throws ParseError (with byte offset) on malformed input. An optional
/// ">>graph6<<" header is accepted; sparse6/digraph6 inputs are rejected.
Graph parse_graph6(std::string_view text);

/// Reads every non-empty line of a stream.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace specsat
