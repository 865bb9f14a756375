// families.cpp
#include "specsat/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "specsat/error.hpp"
#include "specsat/graph6.hpp"

namespace specsat {

int PartitionedGraph::part_of(Vertex v) const {
  int start = 0;
  for (int i = 0; i < r(); ++i) {
    if (v < start + base_sizes[i]) return i;
    start += base_sizes[i];
  }
  fail(ErrorKind::kInvalidArgument, "vertex " + std::to_string(v) + " outside partition");
}

void PartitionedGraph::check_invariants() const {
  graph.check_invariants();
  require(static_cast<int>(parts.size()) == r(), ErrorKind::kInvalidArgument, "parts/base_sizes mismatch");
  int next = 0;
  for (int i = 0; i < r(); ++i) {
    require(static_cast<int>(parts[i].size()) == base_sizes[i], ErrorKind::kInvalidArgument, "part size mismatch");
    for (Vertex v : parts[i]) require(v == next++, ErrorKind::kInvalidArgument, "parts must be consecutive ranges");
    if (i > 0) require(base_sizes[i] <= base_sizes[i - 1], ErrorKind::kInvalidArgument, "sizes not descending");
  }
  require(next == n(), ErrorKind::kInvalidArgument, "parts do not cover the vertex set");
  Graph expected = complete_multipartite(base_sizes);
  for (const Edge& e : added_class_edges) {
    require(part_of(e.u) == part_of(e.v), ErrorKind::kInvalidArgument, "added edge is not a class-edge");
    expected.add_edge(e.u, e.v);
  }
  for (const Edge& e : deleted_cross_edges) {
    require(part_of(e.u) != part_of(e.v), ErrorKind::kInvalidArgument, "deleted edge is not a cross-edge");
    expected.remove_edge(e.u, e.v);
  }
  require(expected == graph, ErrorKind::kInvalidArgument, "graph disagrees with its bookkeeping");
}

namespace {

void require_descending(const std::vector<int>& sizes) {
  require(!sizes.empty(), ErrorKind::kInvalidArgument, "empty part-size list");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    require(sizes[i] > 0, ErrorKind::kInvalidArgument, "part sizes must be positive");
    if (i > 0)
      require(sizes[i] <= sizes[i - 1], ErrorKind::kInvalidArgument, "part sizes must be non-increasing");
  }
}

PartitionedGraph base_partitioned(const std::vector<int>& sizes) {
  require_descending(sizes);
  PartitionedGraph pg;
  pg.graph = complete_multipartite(sizes);
  pg.base_sizes = sizes;
  int v = 0;
  for (int s : sizes) {
    std::vector<Vertex> part(s);
    std::iota(part.begin(), part.end(), v);
    v += s;
    pg.parts.push_back(std::move(part));
  }
  return pg;
}

}  // namespace

PartitionedGraph embed_in_parts(const std::vector<int>& sizes, const std::vector<Graph>& embedded) {
  require(embedded.size() <= sizes.size(), ErrorKind::kInvalidArgument, "more embedded graphs than parts");
  PartitionedGraph pg = base_partitioned(sizes);
  for (std::size_t i = 0; i < embedded.size(); ++i) {
    const Graph h = embedded[i].strip_isolated();
    require(h.n() <= sizes[i], ErrorKind::kInvalidArgument,
            "embedded graph on " + std::to_string(h.n()) + " vertices does not fit in part " + std::to_string(i) +
                " of size " + std::to_string(sizes[i]));
    const Vertex offset = pg.parts[i].front();
    for (const Edge& e : h.edges()) {
      pg.graph.add_edge(offset + e.u, offset + e.v);
      pg.added_class_edges.emplace_back(offset + e.u, offset + e.v);
    }
  }
  std::sort(pg.added_class_edges.begin(), pg.added_class_edges.end());
  return pg;
}

std::vector<int> turan_sizes(int n, int r) {
  require(r >= 1, ErrorKind::kInvalidArgument, "r must be at least 1");
  require(n >= 1, ErrorKind::kInvalidArgument, "n must be positive");
  require(r <= n, ErrorKind::kInvalidArgument, "r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
  std::vector<int> sizes(r, n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

PartitionedGraph turan(int n, int r) { return base_partitioned(turan_sizes(n, r)); }

PartitionedGraph y_graph(int n, int r, int q) {
  require(q >= 0, ErrorKind::kInvalidArgument, "q must be nonnegative");
  const auto sizes = turan_sizes(n, r);
  require(2 * q <= sizes.front(), ErrorKind::kInvalidArgument,
          "a " + std::to_string(q) + "-edge matching does not fit in a part of size " + std::to_string(sizes.front()));
  return embed_in_parts(sizes, {Graph::matching(q)});
}

PartitionedGraph l_graph(int n, int r, int q) {
  require(q >= 0, ErrorKind::kInvalidArgument, "q must be nonnegative");
  const auto sizes = turan_sizes(n, r);
  const Graph h = q == 3 ? Graph::complete(3) : Graph::star(q);
  require(h.n() <= sizes.back(), ErrorKind::kInvalidArgument,
          "embedded graph does not fit in a smallest part of size " + std::to_string(sizes.back()));
  std::vector<Graph> embedded(sizes.size(), Graph(0));
  embedded.back() = h;
  return embed_in_parts(sizes, embedded);
}

PartitionedGraph t_star_graph(int n, int r, int q) {
  require(q >= 0, ErrorKind::kInvalidArgument, "q must be nonnegative");
  const auto sizes = turan_sizes(n, r);
  require(q == 0 || q + 1 <= sizes.front(), ErrorKind::kInvalidArgument,
          "a " + std::to_string(q) + "-edge star does not fit in a part of size " + std::to_string(sizes.front()));
  return embed_in_parts(sizes, {Graph::star(q)});
}

PartitionedGraph perturbed_multipartite(const std::vector<int>& sizes, const std::vector<Edge>& class_edges,
                                        const std::vector<Edge>& cross_nonedges) {
  PartitionedGraph pg = base_partitioned(sizes);
  auto in_range = [&](const Edge& e) { return e.u >= 0 && e.v < pg.n() && e.u != e.v; };
  for (const Edge& e : class_edges) {
    if (!in_range(e) || pg.part_of(e.u) != pg.part_of(e.v))
      fail(ErrorKind::kInvalidArgument, "edge " + to_string(e) + " is not internal to a part");
    if (pg.graph.has_edge(e.u, e.v))
      fail(ErrorKind::kInvalidArgument, "class edge " + to_string(e) + " listed twice");
    pg.graph.add_edge(e.u, e.v);
    pg.added_class_edges.push_back(e);
  }
  for (const Edge& e : cross_nonedges) {
    if (!in_range(e) || pg.part_of(e.u) == pg.part_of(e.v))
      fail(ErrorKind::kInvalidArgument, "edge " + to_string(e) + " does not join two parts");
    if (!pg.graph.has_edge(e.u, e.v))
      fail(ErrorKind::kInvalidArgument, "cross edge " + to_string(e) + " listed twice");
    pg.graph.remove_edge(e.u, e.v);
    pg.deleted_cross_edges.push_back(e);
  }
  std::sort(pg.added_class_edges.begin(), pg.added_class_edges.end());
  std::sort(pg.deleted_cross_edges.begin(), pg.deleted_cross_edges.end());
  return pg;
}

EdgeSplit classify_edges(const PartitionedGraph& pg) {
  EdgeSplit split;
  for (const Edge& e : pg.graph.edges())
    (pg.part_of(e.u) == pg.part_of(e.v) ? split.class_edges : split.cross_edges).push_back(e);
  return split;
}

FamilyDescriptor family_descriptor(const PartitionedGraph& pg) {
  FamilyDescriptor d;
  for (int i = 0; i < pg.r(); ++i) {
    const Graph part = pg.graph.induced(pg.parts[i]).strip_isolated();
    d.entries.emplace_back(pg.base_sizes[i], canonical_code(part));
  }
  std::sort(d.entries.rbegin(), d.entries.rend());
  return d;
}

std::string describe(const FamilyDescriptor& d) {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (const auto& [size, code] : d.entries) {
    if (!out.empty()) out += ' ';
    out += std::to_string(size) + ':';
    for (std::uint8_t b : code.bytes) {
      out += kHex[b >> 4];
      out += kHex[b & 15];
    }
  }
  return out;
}

namespace {

constexpr int kMaxShapeEdges = 8;

std::vector<std::vector<Graph>> build_shapes() {
  std::vector<std::vector<Graph>> shapes(kMaxShapeEdges + 1);
  shapes[0].push_back(Graph(0));
  for (int k = 1; k <= kMaxShapeEdges; ++k) {
    std::map<CanonicalCode, Graph> found;
    auto offer = [&](const Graph& h) {
      const CanonicalForm f = canonical_form(h);
      if (found.count(f.code)) return;
      std::vector<int> perm(h.n());
      for (int i = 0; i < h.n(); ++i) perm[f.order[i]] = i;
      found.emplace(f.code, h.relabel(perm));
    };
    for (const Graph& base : shapes[k - 1]) {
      const int m = base.n();
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
          if (!base.has_edge(u, v)) {
            Graph h = base;
            h.add_edge(u, v);
            offer(h);
          }
      Graph one = base.disjoint_union(Graph(1));
      for (int u = 0; u < m; ++u) {
        Graph h = one;
        h.add_edge(u, m);
        offer(h);
      }
      offer(base.disjoint_union(Graph::matching(1)));
    }
    for (auto& [code, g] : found) shapes[k].push_back(std::move(g));
  }
  return shapes;
}

}  // namespace

const std::vector<Graph>& edge_shapes(int edges) {
  require(edges >= 0 && edges <= kMaxShapeEdges, ErrorKind::kUnsupportedSize,
          "edge shapes available for at most " + std::to_string(kMaxShapeEdges) + " edges");
  static const std::vector<std::vector<Graph>> shapes = build_shapes();
  return shapes[edges];
}

std::vector<PartitionedGraph> enumerate_family(int n, int r, int q, int cap) {
  require(q >= 0, ErrorKind::kInvalidArgument, "q must be nonnegative");
  require(q <= cap && q <= kMaxShapeEdges, ErrorKind::kUnsupportedSize,
          "family enumeration capped at q <= " + std::to_string(std::min(cap, kMaxShapeEdges)));
  const auto sizes = turan_sizes(n, r);
  long long slots = 0;
  for (int s : sizes) slots += static_cast<long long>(s) * (s - 1) / 2;
  require(q <= slots, ErrorKind::kInvalidArgument, "not enough intra-part pairs for q added edges");

  // Each part gets (edge count, shape index); equal-size neighbours are
  // constrained to non-increasing choices so each multiset appears once.
  std::vector<PartitionedGraph> out;
  std::vector<std::pair<int, int>> choice(sizes.size());
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == sizes.size()) {
      if (remaining != 0) return;
      std::vector<Graph> embedded;
      for (const auto& [k, s] : choice) embedded.push_back(edge_shapes(k)[s]);
      out.push_back(embed_in_parts(sizes, embedded));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      const auto& shapes = edge_shapes(k);
      for (int s = static_cast<int>(shapes.size()) - 1; s >= 0; --s) {
        if (shapes[s].n() > sizes[i]) continue;
        if (i > 0 && sizes[i] == sizes[i - 1] && std::make_pair(k, s) > choice[i - 1]) continue;
        choice[i] = {k, s};
        self(self, i + 1, remaining - k);
      }
    }
  };
  recurse(recurse, 0, q);

  std::vector<std::pair<FamilyDescriptor, std::size_t>> keyed;
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(family_descriptor(out[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<PartitionedGraph> sorted;
  sorted.reserve(out.size());
  // On few vertices a dense part can make two descriptors the same graph (the
  // partition is no longer recoverable); whole-graph codes settle it.
  std::set<CanonicalCode> seen;
  for (const auto& [d, i] : keyed)
    if (n > kDefaultCanonicalCap || seen.insert(canonical_code(out[i].graph)).second) sorted.push_back(std::move(out[i]));
  return sorted;
}

FamilyCrossCheck cross_check_family(int n, int r, int q) {
  require(n <= 12, ErrorKind::kUnsupportedSize, "family cross-check limited to n <= 12");
  const auto members = enumerate_family(n, r, q);
  const PartitionedGraph base = turan(n, r);
  std::vector<Edge> slots;
  for (const auto& part : base.parts)
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b) slots.emplace_back(part[a], part[b]);

  std::set<CanonicalCode> brute;
  std::vector<int> pick(q);
  auto recurse = [&](auto&& self, int depth, int start) -> void {
    if (depth == q) {
      Graph g = base.graph;
      for (int idx : pick) g.add_edge(slots[idx].u, slots[idx].v);
      brute.insert(canonical_code(g));
      return;
    }
    for (int i = start; i < static_cast<int>(slots.size()); ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);

  std::set<CanonicalCode> listed;
  for (const auto& m : members) listed.insert(canonical_code(m.graph));

  FamilyCrossCheck check;
  check.descriptor_classes = static_cast<int>(members.size());
  check.canonical_classes = static_cast<int>(brute.size());
  check.consistent = listed.size() == members.size() && listed == brute;
  return check;
}

std::vector<Graph> enumerate_all_graphs(int n) {
  require(n >= 0, ErrorKind::kInvalidArgument, "n must be nonnegative");
  require(n <= kMaxEnumerateAllVertices, ErrorKind::kUnsupportedSize,
          "exhaustive enumeration limited to n <= " + std::to_string(kMaxEnumerateAllVertices));
  static std::mutex mu;
  static std::vector<std::vector<Graph>> levels{{Graph(0)}};
  std::lock_guard<std::mutex> lock(mu);
  // Every graph on k vertices arises from one on k-1 vertices by adding a
  // vertex joined to some subset.
  while (static_cast<int>(levels.size()) <= n) {
    const int k = static_cast<int>(levels.size());
    std::map<CanonicalCode, Graph> found;
    for (const Graph& base : levels.back()) {
      const Graph grown = base.disjoint_union(Graph(1));
      for (unsigned mask = 0; mask < (1U << (k - 1)); ++mask) {
        Graph h = grown;
        for (int v = 0; v < k - 1; ++v)
          if (mask >> v & 1U) h.add_edge(v, k - 1);
        const CanonicalForm f = canonical_form(h);
        if (found.count(f.code)) continue;
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[f.order[i]] = i;
        found.emplace(f.code, h.relabel(perm));
      }
    }
    std::vector<Graph> level;
    level.reserve(found.size());
    for (auto& [code, g] : found) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  return levels[n];
}

Graph named_shape(std::string_view name) {
  if (name.empty()) return Graph(0);
  int k = 0;
  const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
  if (ec != std::errc() || ptr != name.data() + name.size() || name.size() < 2 || k < 0)
    fail(ErrorKind::kInvalidArgument, "unrecognized shape '" + std::string(name) + "'");
  switch (name[0]) {
    case 'M':
      return Graph::matching(k);
    case 'S':
      return Graph::star(k);
    case 'P':
      return Graph::path(k);
    case 'K':
      return Graph::complete(k);
    case 'C':
      return Graph::cycle(k);
    default:
      fail(ErrorKind::kInvalidArgument, "unrecognized shape '" + std::string(name) + "'");
  }
}

namespace {

std::string component_label(const Graph& c) {
  const int n = c.n();
  const long long m = c.edge_count();
  const DegreeStats d = degree_stats(c);
  if (m == static_cast<long long>(n) * (n - 1) / 2) return "K" + std::to_string(n);
  if (n >= 3 && m == n - 1 && d.max_degree == n - 1) return "S" + std::to_string(n - 1);
  if (n >= 3 && m == n - 1 && d.max_degree == 2) return "P" + std::to_string(n);
  if (n >= 3 && m == n && d.max_degree == 2 && d.min_degree == 2) return "C" + std::to_string(n);
  return "g6:" + emit_graph6(n <= kDefaultCanonicalCap ? canonical_graph(c) : c);
}

}  // namespace

std::string shape_label(const Graph& h) {
  const Graph core = h.strip_isolated();
  if (core.n() == 0) return "empty";
  std::map<std::string, int> counts;
  for (const auto& comp : core.components()) ++counts[component_label(core.induced(comp))];
  std::vector<std::pair<std::string, int>> items(counts.begin(), counts.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string out;
  for (const auto& [label, count] : items) {
    if (!out.empty()) out += '+';
    out += (count > 1 ? std::to_string(count) : "") + label;
  }
  return out;
}

std::string member_label(const PartitionedGraph& pg) {
  std::string out;
  for (int i = 0; i < pg.r(); ++i) {
    const Graph part = pg.graph.induced(pg.parts[i]).strip_isolated();
    if (part.n() == 0) continue;
    if (!out.empty()) out += ' ';
    out += shape_label(part) + "@" + std::to_string(i) + "(" + std::to_string(pg.base_sizes[i]) + ")";
  }
  if (pg.alpha2() > 0) out += (out.empty() ? "" : " ") + std::string("-") + std::to_string(pg.alpha2()) + "cross";
  return out.empty() ? "T" : out;
}

}  // namespace specsat
