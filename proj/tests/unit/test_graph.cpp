// test_graph.cpp — graph core, canonical codes, graph6.
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "specsat/canonical.hpp"
#include "specsat/error.hpp"
#include "specsat/graph.hpp"
#include "specsat/graph6.hpp"

using namespace specsat;

TEST_CASE("complete multipartite edge counts") {
  std::vector<int> a{3, 3}, b{1}, c{2, 2, 2};
  CHECK(complete_multipartite(a).edge_count() == 9);
  CHECK(complete_multipartite(b).n() == 1);
  CHECK(complete_multipartite(b).edge_count() == 0);
  CHECK(complete_multipartite(c).edge_count() == 12);
  std::vector<int> bad{2, 0};
  CHECK_THROWS_AS(complete_multipartite(bad), Error);
}

TEST_CASE("degree stats") {
  std::vector<int> k43{4, 3};
  auto s = degree_stats(complete_multipartite(k43));
  CHECK(s.min_degree == 3);
  CHECK(s.max_degree == 4);
  CHECK(s.degree_square_sum == 84);
  auto e = degree_stats(Graph(5));
  CHECK(e.max_degree == 0);
  CHECK(e.degree_square_sum == 0);
  auto k4 = degree_stats(Graph::complete(4));
  CHECK(k4.degree_square_sum == 36);
}

TEST_CASE("edges, loops and bounds") {
  Graph g(4);
  g.add_edge(2, 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_THROWS_AS(g.add_edge(3, 3), Error);
  CHECK_THROWS_AS(g.add_edge(0, 4), Error);
  g.remove_edge(1, 2);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("invariants hold on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 70);
    Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK_NOTHROW(g.check_invariants());
    const auto s = degree_stats(g);
    const long long m = g.edge_count();
    CHECK(s.degree_square_sum <= m * m + m);
    long long total = 0;
    for (const auto& comp : g.components()) total += static_cast<long long>(comp.size());
    CHECK(total == n);
  }
}

TEST_CASE("canonical code is relabeling invariant") {
  std::vector<int> k33{3, 3};
  const Graph g = complete_multipartite(k33);
  std::mt19937 rng(3);
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  for (int t = 0; t < 20; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(g.relabel(perm)) == canonical_code(g));
  }
  Graph p3 = Graph::path(3);
  Graph k2k1(3);
  k2k1.add_edge(0, 1);
  CHECK(canonical_code(p3) != canonical_code(k2k1));
}

TEST_CASE("canonical classes match brute-force relabeling at n = 4 and 6") {
  for (int n : {4, 6}) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> brute;
    std::set<CanonicalCode> codes;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      if (n == 4) brute.insert(oracle::min_relabeled_mask(n, mask));
      codes.insert(canonical_code(oracle::from_mask(n, mask)));
    }
    if (n == 4) {
      CHECK(brute.size() == 11);
      CHECK(codes.size() == 11);
    } else {
      CHECK(codes.size() == 156);
    }
  }
}

TEST_CASE("canonical code separates random non-isomorphic pairs like brute force") {
  std::mt19937 rng(11);
  const int n = 6;
  for (int t = 0; t < 200; ++t) {
    const std::uint32_t a = rng() % (1U << 15), b = rng() % (1U << 15);
    const bool same = oracle::min_relabeled_mask(n, a) == oracle::min_relabeled_mask(n, b);
    CHECK(same == (canonical_code(oracle::from_mask(n, a)) == canonical_code(oracle::from_mask(n, b))));
  }
}

TEST_CASE("canonical size cap") {
  CHECK_THROWS_AS(canonical_code(Graph(17)), Error);
  CHECK_NOTHROW(canonical_code(Graph(16)));
}

TEST_CASE("graph6 fixed strings") {
  CHECK(emit_graph6(Graph::complete(3)) == "Bw");
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(emit_graph6(Graph(0)) == "?");
  CHECK(parse_graph6(">>graph6<<Bw") == Graph::complete(3));
}

TEST_CASE("graph6 round trip, short and long form") {
  std::mt19937 rng(5);
  for (int n : {2, 8, 8, 8, 13, 62, 63, 100}) {
    Graph g = oracle::random_graph(n, 0.4, rng);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  CHECK(emit_graph6(Graph(63))[0] == '~');
}

TEST_CASE("graph6 rejects malformed input with an offset") {
  CHECK_THROWS_AS(parse_graph6(":Fa@x^"), ParseError);
  CHECK_THROWS_AS(parse_graph6("&DI?AO?"), ParseError);
  try {
    parse_graph6("Bw!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() >= 1);
  }
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
}

TEST_CASE("graph6 stream reader") {
  std::istringstream in("Bw\n\n@\n");
  const auto graphs = read_graph6_lines(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == Graph::complete(3));
}
