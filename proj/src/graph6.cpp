// graph6.cpp
#include "specsat/graph6.hpp"

#include <istream>

#include "specsat/error.hpp"

namespace specsat {

std::string emit_graph6(const Graph& g) {
  const int n = g.n();
  require(n <= kGraph6MaxVertices, ErrorKind::kUnsupportedSize, "graph6 supports n <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (pos >= text.size()) throw ParseError(pos, "empty graph6 string");
  if (text[pos] == ':') throw ParseError(pos, "sparse6 input is not supported");
  if (text[pos] == '&') throw ParseError(pos, "digraph6 input is not supported");

  auto value = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError(at, "unexpected end of graph6 string");
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError(at, "byte " + std::to_string(c) + " outside 63..126");
    return c - 63;
  };

  int n = 0;
  if (value(pos) < 63) {
    n = value(pos);
    pos += 1;
  } else {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
      throw ParseError(pos + 1, "graphs with n > 258047 are not supported");
    n = (value(pos + 1) << 12) | (value(pos + 2) << 6) | value(pos + 3);
    if (n <= 62) throw ParseError(pos, "non-canonical long-form vertex count");
    pos += 4;
  }

  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw ParseError(std::min(text.size(), pos + need),
                     "expected " + std::to_string(need) + " data bytes, found " + std::to_string(text.size() - pos));

  Graph g(n);
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((value(at) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (k % 6 != 0) {
    const std::size_t at = pos + static_cast<std::size_t>(k / 6);
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (value(at) & pad_mask) throw ParseError(at, "nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace specsat
