// graph.cpp — bit-row graph representation.
#include "specsat/graph.hpp"

#include <algorithm>
#include <numeric>

#include "specsat/error.hpp"

namespace specsat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kUnsupportedSize: return "unsupported-size";
    case ErrorKind::kParseError: return "parse-error";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kDivergenceRisk: return "divergence-risk";
    case ErrorKind::kUnsupportedRegime: return "unsupported-regime";
    case ErrorKind::kNumeric: return "numeric-error";
  }
  return "error";
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  require(n >= 0, ErrorKind::kInvalidArgument, "negative vertex count");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  require(n >= 3, ErrorKind::kInvalidArgument, "cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int leaves) {
  require(leaves >= 0, ErrorKind::kInvalidArgument, "negative star size");
  if (leaves == 0) return Graph(0);
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph Graph::matching(int edges) {
  Graph g(2 * edges);
  for (int i = 0; i < edges; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    fail(ErrorKind::kInvalidArgument,
         "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  require(u != v, ErrorKind::kInvalidArgument, "loop at vertex " + std::to_string(u));
  bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  bits_[row_offset(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (std::uint64_t w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::common_neighbor_count(Vertex u, Vertex v) const { return popcount_and(row(u), row(v)); }

Graph Graph::induced(std::span<const Vertex> vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

Graph Graph::relabel(std::span<const int> perm) const {
  require(static_cast<int>(perm.size()) == n_, ErrorKind::kInvalidArgument, "permutation size mismatch");
  Graph h(n_);
  for (const Edge& e : edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

Graph Graph::strip_isolated() const {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) > 0) keep.push_back(v);
  return induced(keep);
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph h(n_ + other.n_);
  for (const Edge& e : edges()) h.add_edge(e.u, e.v);
  for (const Edge& e : other.edges()) h.add_edge(e.u + n_, e.v + n_);
  return h;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n_, 0);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

void Graph::check_invariants() const {
  for (Vertex u = 0; u < n_; ++u) {
    require(!has_edge(u, u), ErrorKind::kInvalidArgument, "loop at vertex " + std::to_string(u));
    for (Vertex v : neighbors(u))
      require(has_edge(v, u), ErrorKind::kInvalidArgument, "asymmetric adjacency " + to_string(Edge(u, v)));
  }
  // Padding bits beyond n must stay clear.
  for (Vertex u = 0; u < n_; ++u)
    for (int b = n_; b < words_ * 64; ++b)
      require(!((row(u)[b >> 6] >> (b & 63)) & 1U), ErrorKind::kInvalidArgument, "stray padding bit");
  const DegreeStats s = degree_stats(*this);
  const long long m = edge_count();
  require(s.degree_square_sum <= m * m + m, ErrorKind::kInvalidArgument, "degree-square sum exceeds m^2+m");
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.n() == 0) return s;
  s.min_degree = g.n();
  for (Vertex v = 0; v < g.n(); ++v) {
    const int d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
    s.degree_square_sum += static_cast<long long>(d) * d;
  }
#ifndef NDEBUG
  const long long m = g.edge_count();
  if (s.degree_square_sum > m * m + m) fail(ErrorKind::kInvalidArgument, "degree-square sum exceeds m^2+m");
#endif
  return s;
}

Graph complete_multipartite(std::span<const int> sizes) {
  require(!sizes.empty(), ErrorKind::kInvalidArgument, "empty part-size list");
  for (int s : sizes) require(s > 0, ErrorKind::kInvalidArgument, "part sizes must be positive");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  Graph g(n);
  std::vector<int> part(n);
  int v = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (int k = 0; k < sizes[i]; ++k) part[v++] = static_cast<int>(i);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part[a] != part[b]) g.add_edge(a, b);
  return g;
}

}  // namespace specsat
