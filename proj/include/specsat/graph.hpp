// graph.hpp — undirected simple graph on vertices 0..n-1 stored as bit rows.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace specsat {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// Star with `leaves` edges, so leaves + 1 vertices.
  static Graph star(int leaves);
  static Graph matching(int edges);

  int n() const { return n_; }
  int words() const { return words_; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
  }
  /// Throws invalid-argument on loops or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }

  int degree(Vertex v) const;
  long long edge_count() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;
  int common_neighbor_count(Vertex u, Vertex v) const;

  /// Vertex-induced subgraph on `vertices` (relabelled 0..k-1 in the given order).
  Graph induced(std::span<const Vertex> vertices) const;
  /// Graph whose vertex perm[v] is adjacent to perm[u] iff v~u here.
  Graph relabel(std::span<const int> perm) const;
  /// Drops isolated vertices, keeping relative order of the rest.
  Graph strip_isolated() const;
  /// Disjoint union: vertices of `other` follow those of *this.
  Graph disjoint_union(const Graph& other) const;

  /// Connected components, each sorted ascending; components ordered by least vertex.
  std::vector<std::vector<Vertex>> components() const;
  bool connected() const;

  /// Symmetry, no loops, degree-square bound. Throws on violation.
  void check_invariants() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t row_offset(Vertex v) const { return static_cast<std::size_t>(v) * words_; }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  long long degree_square_sum = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Complete multipartite graph; parts occupy consecutive vertex ranges in
/// declaration order.
Graph complete_multipartite(std::span<const int> sizes);

inline int popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace specsat
