// families.hpp — Turán-type constructions and family enumerators.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specsat/canonical.hpp"
#include "specsat/graph.hpp"

namespace specsat {

/// A graph together with an r-part vertex partition relative to which it is a
/// complete multipartite graph plus class-edges minus cross-edges.
///
/// Parts occupy consecutive vertex ranges; base_sizes is non-increasing.
struct PartitionedGraph {
  Graph graph;
  std::vector<std::vector<Vertex>> parts;
  std::vector<int> base_sizes;
  std::vector<Edge> added_class_edges;
  std::vector<Edge> deleted_cross_edges;

  int n() const { return graph.n(); }
  int r() const { return static_cast<int>(base_sizes.size()); }
  int alpha1() const { return static_cast<int>(added_class_edges.size()); }
  int alpha2() const { return static_cast<int>(deleted_cross_edges.size()); }
  int part_of(Vertex v) const;

  /// Re-derives the graph from the bookkeeping and compares; throws on mismatch.
  void check_invariants() const;
};

/// Complete multipartite base plus per-part embedded graphs. H_i's vertices
/// map onto the first |V(H_i)| vertices of part i. Sizes must be non-increasing.
PartitionedGraph embed_in_parts(const std::vector<int>& sizes, const std::vector<Graph>& embedded);

/// Part sizes of T_{n,r}, largest first.
std::vector<int> turan_sizes(int n, int r);

PartitionedGraph turan(int n, int r);
/// T_{n,r} plus a q-edge matching in a largest part.
PartitionedGraph y_graph(int n, int r, int q);
/// T_{n,r} plus K_3 (q = 3) or a q-edge star (otherwise) in a smallest part.
PartitionedGraph l_graph(int n, int r, int q);
/// T_{n,r} plus a q-edge star in a largest part.
PartitionedGraph t_star_graph(int n, int r, int q);

/// Base multipartite graph with explicit class-edge additions and cross-edge
/// deletions. Throws invalid-argument naming the first misclassified edge.
PartitionedGraph perturbed_multipartite(const std::vector<int>& sizes, const std::vector<Edge>& class_edges,
                                        const std::vector<Edge>& cross_nonedges);

struct EdgeSplit {
  std::vector<Edge> class_edges;
  std::vector<Edge> cross_edges;
};

EdgeSplit classify_edges(const PartitionedGraph& pg);

/// Multiset of (part size, canonical code of the part's graph, isolated
/// vertices stripped), sorted descending.
struct FamilyDescriptor {
  std::vector<std::pair<int, CanonicalCode>> entries;

  auto operator<=>(const FamilyDescriptor&) const = default;
  bool operator==(const FamilyDescriptor&) const = default;
};

FamilyDescriptor family_descriptor(const PartitionedGraph& pg);
std::string describe(const FamilyDescriptor& d);

/// Graph shapes with exactly `edges` edges and no isolated vertices, one per
/// isomorphism class, in canonical-code order.
const std::vector<Graph>& edge_shapes(int edges);

inline constexpr int kDefaultFamilyCap = 6;

/// One member per isomorphism class of the family obtained from T_{n,r} by
/// adding q edges, ordered by descriptor.
std::vector<PartitionedGraph> enumerate_family(int n, int r, int q, int cap = kDefaultFamilyCap);

struct FamilyCrossCheck {
  int descriptor_classes = 0;
  int canonical_classes = 0;
  bool consistent = false;
};

/// For n <= 12: compares the descriptor enumeration against brute-force
/// bucketing of every labeled q-edge addition by canonical code.
FamilyCrossCheck cross_check_family(int n, int r, int q);

/// Small graph by name: M<k> (k-edge matching), S<k> (k-edge star), P<k>
/// (path on k vertices), K<k>, C<k>; the empty string is the empty graph.
Graph named_shape(std::string_view name);

/// Readable name of a small graph: 2K2, S3, K3, P4, ... or its graph6 string.
std::string shape_label(const Graph& h);

/// Embedded shapes per part, e.g. "P3@0(200) K2@1(200)"; "T" when nothing is added.
std::string member_label(const PartitionedGraph& pg);

inline constexpr int kMaxEnumerateAllVertices = 8;

/// One graph per isomorphism class on n vertices, in canonical-code order.
std::vector<Graph> enumerate_all_graphs(int n);

}  // namespace specsat
