// test_families.cpp — constructors, descriptors, family enumeration.
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "specsat/error.hpp"
#include "specsat/families.hpp"

using namespace specsat;

namespace {

long long turan_edges(int n, int r) {
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  for (int s : turan_sizes(n, r)) total -= static_cast<long long>(s) * (s - 1) / 2;
  return total;
}

// Classes of T_{n,r} plus q intra-part edges, by brute-force relabeling.
std::size_t brute_family_classes(int n, int r, int q) {
  const auto sizes = turan_sizes(n, r);
  std::vector<int> part;
  for (int i = 0; i < r; ++i) part.insert(part.end(), sizes[i], i);
  std::vector<std::pair<int, int>> slots;
  std::uint32_t base = 0;
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      if (part[u] == part[v]) slots.emplace_back(bit, 0);
      else base |= 1U << bit;
    }
  std::set<std::uint32_t> classes;
  std::vector<bool> pick(slots.size(), false);
  std::fill(pick.begin(), pick.begin() + q, true);
  do {
    std::uint32_t mask = base;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (pick[i]) mask |= 1U << slots[i].first;
    classes.insert(oracle::min_relabeled_mask(n, mask));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return classes.size();
}

}  // namespace

TEST_CASE("turan sizes and graphs") {
  CHECK(turan_sizes(7, 2) == std::vector<int>{4, 3});
  CHECK(turan_sizes(6, 3) == std::vector<int>{2, 2, 2});
  CHECK(turan(7, 2).graph.edge_count() == 12);
  CHECK(turan(5, 5).graph == Graph::complete(5));
  CHECK_THROWS_AS(turan(3, 4), Error);
  CHECK_THROWS_AS(turan(3, 0), Error);
}

TEST_CASE("y, l and star hosts") {
  const auto y = y_graph(7, 2, 2);
  CHECK(y.graph.edge_count() == 14);
  CHECK(y.added_class_edges.size() == 2);
  CHECK(y.part_of(y.added_class_edges[0].u) == 0);
  CHECK(y_graph(6, 3, 1).graph.edge_count() == 13);

  const auto l3 = l_graph(8, 2, 3);
  const auto l3_edges = l3.added_class_edges;
  CHECK(l3_edges.size() == 3);
  CHECK(shape_label(named_shape("K3")) == "K3");
  CHECK(member_label(l3).rfind("K3@", 0) == 0);
  CHECK(member_label(l_graph(8, 2, 2)).rfind("S2@", 0) == 0);
  const auto l1 = l_graph(9, 2, 1);
  CHECK(l3.part_of(l3_edges[0].u) == 1);
  CHECK(l1.base_sizes[l1.part_of(l1.added_class_edges[0].u)] == 4);

  const auto t = t_star_graph(9, 2, 3);
  CHECK(t.base_sizes[t.part_of(t.added_class_edges[0].u)] == 5);
  CHECK(member_label(t).rfind("S3@0", 0) == 0);
  CHECK_THROWS_AS(y_graph(10, 2, 3), Error);  // 6 matching vertices in a part of 5
}

TEST_CASE("star host equals L when r divides n and q != 3") {
  for (int q : {1, 2, 4, 5})
    CHECK(isomorphic(t_star_graph(12, 2, q).graph, l_graph(12, 2, q).graph));
  CHECK(!isomorphic(t_star_graph(12, 2, 3).graph, l_graph(12, 2, 3).graph));
}

TEST_CASE("perturbed multipartite bookkeeping") {
  const auto a = perturbed_multipartite({4, 3}, {Edge(0, 1)}, {});
  CHECK(a.alpha1() == 1);
  CHECK(a.graph.edge_count() == 13);
  const auto b = perturbed_multipartite({4, 3}, {}, {Edge(0, 4)});
  CHECK(b.alpha2() == 1);
  CHECK(!b.graph.has_edge(0, 4));
  const auto c = perturbed_multipartite({200, 200}, {Edge(0, 1), Edge(2, 3), Edge(4, 5)}, {Edge(6, 300)});
  CHECK(c.graph.edge_count() == turan_edges(400, 2) + 2);
  CHECK_THROWS_AS(perturbed_multipartite({4, 3}, {Edge(0, 4)}, {}), Error);
  CHECK_THROWS_AS(perturbed_multipartite({4, 3}, {}, {Edge(0, 1)}), Error);
  CHECK_THROWS_AS(perturbed_multipartite({3, 4}, {}, {}), Error);
}

TEST_CASE("classify edges") {
  const auto t63 = classify_edges(turan(6, 3));
  CHECK(t63.class_edges.empty());
  CHECK(t63.cross_edges.size() == 12);
  const auto y = classify_edges(y_graph(7, 2, 2));
  CHECK(y.class_edges.size() == 2);
  CHECK(y.cross_edges.size() == 12);
  PartitionedGraph k4;
  k4.graph = Graph::complete(4);
  k4.parts = {{0, 1}, {2, 3}};
  k4.base_sizes = {2, 2};
  const auto s = classify_edges(k4);
  CHECK(s.class_edges.size() == 2);
  CHECK(s.cross_edges.size() == 4);
}

TEST_CASE("family class counts") {
  CHECK(enumerate_family(400, 2, 1).size() == 1);
  CHECK(enumerate_family(400, 2, 2).size() == 3);
  CHECK(enumerate_family(7, 2, 1).size() == 2);
  CHECK_THROWS_AS(enumerate_family(400, 2, 7), Error);
}

TEST_CASE("family enumeration agrees with brute-force relabeling") {
  for (auto [n, r, q] : std::vector<std::tuple<int, int, int>>{{6, 2, 1}, {6, 2, 2}, {7, 2, 2}, {7, 2, 3}, {6, 3, 2}, {7, 3, 2}, {7, 2, 4}}) {
    INFO("n=" << n << " r=" << r << " q=" << q);
    CHECK(enumerate_family(n, r, q).size() == brute_family_classes(n, r, q));
  }
}

TEST_CASE("library cross-check of descriptors") {
  for (auto [n, r, q] : std::vector<std::tuple<int, int, int>>{{8, 2, 3}, {9, 3, 2}, {10, 2, 2}}) {
    const auto cc = cross_check_family(n, r, q);
    CHECK(cc.consistent);
    CHECK(cc.descriptor_classes == cc.canonical_classes);
  }
}

TEST_CASE("every member has e(T) + q edges and valid bookkeeping") {
  for (auto [n, r, q] : std::vector<std::tuple<int, int, int>>{{400, 2, 3}, {600, 3, 3}, {99, 2, 4}}) {
    for (const auto& m : enumerate_family(n, r, q)) {
      CHECK(m.graph.edge_count() == turan_edges(n, r) + q);
      CHECK_NOTHROW(m.check_invariants());
      CHECK_NOTHROW(m.graph.check_invariants());
    }
  }
}

TEST_CASE("descriptors are relabeling invariant and distinguish members") {
  const auto members = enumerate_family(12, 2, 3);
  std::set<FamilyDescriptor> seen;
  for (const auto& m : members) seen.insert(family_descriptor(m));
  CHECK(seen.size() == members.size());
}

TEST_CASE("edge shapes") {
  CHECK(edge_shapes(1).size() == 1);
  CHECK(edge_shapes(2).size() == 2);
  CHECK(edge_shapes(3).size() == 5);
  CHECK(edge_shapes(4).size() == 11);
}

TEST_CASE("all graphs by class count") {
  CHECK(enumerate_all_graphs(1).size() == 1);
  CHECK(enumerate_all_graphs(4).size() == 11);
  CHECK(enumerate_all_graphs(5).size() == 34);
  CHECK(enumerate_all_graphs(6).size() == 156);
  CHECK(enumerate_all_graphs(7).size() == 1044);
  CHECK_THROWS_AS(enumerate_all_graphs(9), Error);
}

TEST_CASE("named shapes and labels") {
  CHECK(named_shape("M2").edge_count() == 2);
  CHECK(named_shape("S3").n() == 4);
  CHECK(named_shape("").n() == 0);
  CHECK(shape_label(named_shape("M2")) == "2K2");
  CHECK(member_label(turan(10, 2)) == "T");
  CHECK_THROWS_AS(named_shape("X3"), Error);
}
