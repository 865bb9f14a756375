// counting.hpp — pattern analysis, copy counting and covering numbers.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "specsat/families.hpp"
#include "specsat/graph.hpp"

namespace specsat {

inline constexpr int kMaxChromaticVertices = 12;
inline constexpr int kMaxPatternVertices = 6;
inline constexpr std::uint64_t kMaxCopySets = 1000000;
inline constexpr int kMaxCoveringVertices = 40;

/// A small connected pattern F with its chromatic data.
struct Pattern {
  Graph f_graph;
  int f = 0;
  int chi = 0;
  /// Edges whose deletion lowers chi.
  std::vector<Edge> critical_edges;
  std::uint64_t aut = 1;
  std::string name;

  bool color_critical() const { return !critical_edges.empty(); }
  /// r with chi(F) = r + 1.
  int r() const { return chi - 1; }
};

/// Exact chromatic number for n <= 12.
int chromatic_number(const Graph& g);

/// |Aut(g)| by backtracking over degree-compatible maps.
std::uint64_t count_automorphisms(const Graph& g);

Pattern analyze_pattern(const Graph& g, std::string name = "");

/// K<k>, C<k>, P<k>, S<k> (star with k edges), B<k> (k triangles on a common
/// edge), W<k> (wheel with k rim vertices), or g6:<graph6>.
Pattern named_pattern(std::string_view name);

/// N_F(G): subgraphs of g isomorphic to F (not necessarily induced).
std::uint64_t count_copies(const Pattern& p, const Graph& g);

/// Anchored variant: when chi(F) exceeds the number of parts the base graph is
/// F-free, so every copy uses a class-edge. Copies are counted edge by edge,
/// removing each anchor after use so no copy is counted twice.
std::uint64_t count_copies(const Pattern& p, const PartitionedGraph& pg);

/// N_F(G, e): copies whose edge set contains e.
std::uint64_t count_copies_through_edge(const Pattern& p, const Graph& g, Edge e);

/// c(n, F): fewest copies created by one edge added to T_{n,r}, r = chi(F) - 1.
std::uint64_t c_n_F(int n, const Pattern& p);

/// Copies through an edge added to the first part of K_r(sizes); sizes descending.
std::uint64_t c_parts_F(const std::vector<int>& sizes, const Pattern& p);

/// Distinct vertex sets of F-copies, each sorted ascending.
std::vector<std::vector<Vertex>> copy_vertex_sets(const Pattern& p, const Graph& g);
std::vector<std::vector<Vertex>> copy_vertex_sets(const Pattern& p, const PartitionedGraph& pg);

/// Minimum size of a vertex set meeting every hyperedge (exact branch and bound).
int min_hitting_set(const std::vector<std::vector<Vertex>>& sets);

/// tau_F(G): fewest vertices meeting every copy of F.
int covering_number(const Pattern& p, const Graph& g);
int covering_number(const Pattern& p, const PartitionedGraph& pg);

struct AlphaEstimate {
  double alpha = 0.0;
  double max_relative_residual = 0.0;
  std::vector<std::uint64_t> samples;
};

/// Least-squares fit c(n, F) ~ alpha n^{f-2} over strictly ascending n_list.
AlphaEstimate estimate_alpha_F(const Pattern& p, const std::vector<int>& n_list);

}  // namespace specsat
