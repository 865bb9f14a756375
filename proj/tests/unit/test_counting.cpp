// test_counting.cpp — chromatic numbers, automorphisms, copy counts, covering.
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "specsat/counting.hpp"
#include "specsat/error.hpp"
#include "specsat/families.hpp"
#include "specsat/graph6.hpp"

using namespace specsat;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph random_connected(int n, std::mt19937& rng) {
  for (;;) {
    Graph g = oracle::random_graph(n, 0.6, rng);
    if (g.connected()) return g;
  }
}

// c(n,F) by direct count: fewest copies created by one class-edge of T_{n,r}.
std::uint64_t direct_c(int n, const Pattern& p) {
  const PartitionedGraph t = turan(n, p.r());
  std::uint64_t best = UINT64_MAX;
  for (const auto& part : t.parts) {
    if (part.size() < 2) continue;
    Graph g = t.graph;
    g.add_edge(part[0], part[1]);
    best = std::min(best, oracle::copies(p.f_graph, g) - oracle::copies(p.f_graph, t.graph));
  }
  return best;
}

}  // namespace

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(Graph::complete(4)) == 4);
  CHECK(chromatic_number(Graph::cycle(5)) == 3);
  CHECK(chromatic_number(Graph::cycle(6)) == 2);
  CHECK(chromatic_number(petersen()) == 3);
  CHECK(chromatic_number(Graph(3)) == 1);
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK_THROWS_AS(chromatic_number(Graph(13)), Error);
}

TEST_CASE("pattern analysis") {
  const Pattern k3 = named_pattern("K3");
  CHECK(k3.chi == 3);
  CHECK(k3.critical_edges.size() == 3);
  CHECK(k3.aut == 6);
  const Pattern c5 = named_pattern("C5");
  CHECK(c5.chi == 3);
  CHECK(c5.critical_edges.size() == 5);
  CHECK(c5.aut == 10);
  const Pattern b2 = named_pattern("B2");
  CHECK(b2.chi == 3);
  CHECK(b2.color_critical());
  CHECK(b2.aut == 4);
  CHECK(count_automorphisms(petersen()) == 120);
  CHECK(named_pattern("W5").chi == 4);
  CHECK(!named_pattern("C4").color_critical());
  CHECK_THROWS_AS(named_pattern("Q3"), Error);
  CHECK_THROWS_AS(analyze_pattern(Graph::matching(2)), Error);
}

TEST_CASE("copy counts on fixed graphs") {
  const Pattern k3 = named_pattern("K3");
  CHECK(count_copies(k3, Graph::complete(4)) == 4);
  CHECK(count_copies(k3, turan(6, 3).graph) == 8);
  CHECK(count_copies(named_pattern("C5"), Graph::complete(5)) == 12);
  CHECK(count_copies(k3, turan(8, 2).graph) == 0);
  CHECK(count_copies_through_edge(k3, Graph::complete(4), Edge(0, 3)) == 2);
  PartitionedGraph t = perturbed_multipartite({4, 3}, {Edge(0, 1)}, {});
  CHECK(count_copies_through_edge(k3, t.graph, Edge(0, 1)) == 3);
}

TEST_CASE("copy counts match the placement oracle") {
  std::mt19937 rng(31337);
  const std::vector<std::string> names{"K3", "C4", "C5", "P3", "P4", "S3", "K4", "B2", "W4", "P5"};
  for (int t = 0; t < 120; ++t) {
    const Pattern p = named_pattern(names[rng() % names.size()]);
    const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 8), 0.55, rng);
    INFO(p.name << " on " << emit_graph6(g));
    CHECK(count_copies(p, g) == oracle::copies(p.f_graph, g));
  }
}

TEST_CASE("edge-deletion identity") {
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    const Pattern p = analyze_pattern(random_connected(3 + static_cast<int>(rng() % 3), rng));
    Graph g = oracle::random_graph(6 + static_cast<int>(rng() % 5), 0.6, rng);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const Edge e = edges[rng() % edges.size()];
    Graph h = g;
    h.remove_edge(e.u, e.v);
    CHECK(count_copies(p, g) - count_copies(p, h) == count_copies_through_edge(p, g, e));
  }
}

TEST_CASE("anchored counts equal plain counts") {
  const Pattern k3 = named_pattern("K3"), c5 = named_pattern("C5"), k4 = named_pattern("K4");
  for (const auto& pg : {y_graph(20, 2, 3), l_graph(21, 2, 4), t_star_graph(20, 2, 2), perturbed_multipartite({6, 5}, {Edge(0, 1), Edge(1, 2)}, {Edge(0, 7)})}) {
    CHECK(count_copies(k3, pg) == count_copies(k3, pg.graph));
    CHECK(count_copies(c5, pg) == count_copies(c5, pg.graph));
  }
  const auto y3 = y_graph(15, 3, 2);
  CHECK(count_copies(k4, y3) == count_copies(k4, y3.graph));
}

TEST_CASE("one-edge supersaturation constant") {
  const Pattern k3 = named_pattern("K3");
  CHECK(c_n_F(7, k3) == 3);
  for (int n = 6; n <= 12; ++n) CHECK(c_n_F(n, k3) == static_cast<std::uint64_t>(n / 2));
  for (int n : {6, 7, 9}) CHECK(c_n_F(n, k3) == direct_c(n, k3));
  CHECK(c_n_F(12, named_pattern("K4")) == 16);
  CHECK(c_n_F(9, named_pattern("C5")) == direct_c(9, named_pattern("C5")));
  CHECK(c_parts_F({4, 4}, k3) == 4);
  CHECK(c_parts_F({4, 3}, k3) == 3);
  CHECK_THROWS_AS(c_parts_F({3, 4}, k3), Error);
}

TEST_CASE("hitting sets and covering numbers") {
  const Pattern k3 = named_pattern("K3");
  CHECK(covering_number(k3, turan(8, 2).graph) == 0);
  CHECK(covering_number(k3, y_graph(20, 2, 3)) == 3);
  CHECK(covering_number(k3, Graph::complete(4)) == 2);
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(5 + static_cast<int>(rng() % 5), 0.6, rng);
    const auto sets = copy_vertex_sets(k3, g);
    std::vector<std::vector<int>> plain(sets.begin(), sets.end());
    CHECK(min_hitting_set(sets) == oracle::min_hitting_set(g.n(), plain));
  }
}

TEST_CASE("copy growth exponent") {
  const auto k3 = estimate_alpha_F(named_pattern("K3"), {20, 40, 80});
  CHECK(std::abs(k3.alpha - 0.5) <= 0.02);
  const auto k4 = estimate_alpha_F(named_pattern("K4"), {12, 24, 48});
  CHECK(std::abs(k4.alpha - 1.0 / 9) <= 0.01);
  CHECK_THROWS_AS(estimate_alpha_F(named_pattern("K3"), {6, 6, 6}), Error);
}
