// test_bounds.cpp — verdict logic and the perturbation inequalities.
#include <climits>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "specsat/bounds.hpp"
#include "specsat/error.hpp"

using namespace specsat;

namespace {

Interval pt(double x) { return Interval::point(x); }

long long brute_inside_edges(const Graph& g, int r) {
  const int n = g.n();
  long long best = LLONG_MAX;
  std::vector<int> part(n, 0);
  for (;;) {
    long long inside = 0;
    for (const Edge& e : g.edges()) inside += part[e.u] == part[e.v];
    best = std::min(best, inside);
    int i = 0;
    while (i < n && ++part[i] == r) part[i++] = 0;
    if (i == n) break;
  }
  return best;
}

}  // namespace

TEST_CASE("verdicts come from interval endpoints") {
  CHECK(make_check("a", {1, 2}, {2, 3}).verdict == Verdict::kPass);
  CHECK(make_check("a", {1, 2.5}, {2, 3}).verdict == Verdict::kIndeterminate);
  CHECK(make_check("a", {3.5, 4}, {2, 3}).verdict == Verdict::kFail);
  CHECK(make_check("a", {1, 2}, {2, 3}, Relation::kLess).verdict == Verdict::kIndeterminate);
  CHECK(make_check("a", {1, 1.5}, {2, 3}, Relation::kLess).verdict == Verdict::kPass);
  CHECK(make_check("a", {3, 4}, {2, 3}, Relation::kLess).verdict == Verdict::kFail);
  CHECK(make_check("a", pt(5), pt(5), Relation::kEqual).verdict == Verdict::kPass);
  CHECK(make_check("a", pt(5), pt(6), Relation::kEqual).verdict == Verdict::kFail);
  CHECK(make_check("a", {4, 6}, pt(5), Relation::kEqual).verdict == Verdict::kIndeterminate);
  CHECK(make_check("a", {1, 2}, {2.5, 3}).margin == doctest::Approx(0.5));
  const auto skipped = skipped_check("b", "why");
  CHECK(skipped.verdict == Verdict::kHypothesisNotMet);
  CHECK(std::string(to_string(Verdict::kHypothesisNotMet)) == "hypothesis_not_met");
}

TEST_CASE("two-sided residual") {
  const auto y = first_key_residual_i(y_graph(1000, 2, 3));
  CHECK(y.verdict == Verdict::kPass);
  CHECK(!y.in_regime);
  const auto t = first_key_residual_i(turan(1000, 2));
  CHECK(t.verdict == Verdict::kPass);
  CHECK(t.lhs.lo == 0.0);
  CHECK(t.lhs.hi == 0.0);
  const auto minus = first_key_residual_i(perturbed_multipartite({500, 500}, {}, {Edge(0, 500)}));
  CHECK(minus.verdict == Verdict::kPass);
  const auto strict = first_key_residual_i(y_graph(1000, 2, 3), {kDefaultTol, HypothesisPolicy::kStrict});
  CHECK(strict.verdict == Verdict::kHypothesisNotMet);
}

TEST_CASE("unbalanced upper bound") {
  CHECK(first_key_bound_ii(turan(1000, 2), 0).verdict == Verdict::kPass);
  const auto wide = first_key_bound_ii(perturbed_multipartite({520, 480}, {}, {}), 20);
  CHECK(wide.verdict == Verdict::kHypothesisNotMet);
  const auto ok = first_key_bound_ii(perturbed_multipartite({505, 495}, {Edge(0, 1)}, {}), 5);
  CHECK(ok.verdict == Verdict::kPass);
  CHECK_THROWS_AS(first_key_bound_ii(turan(1000, 2), -1), Error);
}

TEST_CASE("move one vertex") {
  const auto [lower, upper] = move_one_check({6, 2}, 0, 1);
  CHECK(lower.verdict == Verdict::kPass);
  CHECK(lower.lhs.contains(0.375));
  CHECK(lower.rhs.lo <= std::sqrt(15.0) - std::sqrt(12.0) + 1e-12);
  CHECK(lower.rhs.hi >= std::sqrt(15.0) - std::sqrt(12.0) - 1e-12);
  CHECK(upper.verdict == Verdict::kHypothesisNotMet);
  CHECK(move_one_check({5, 4}, 0, 1).first.verdict == Verdict::kHypothesisNotMet);
  CHECK_THROWS_AS(move_one_check({5, 4}, 1, 0), Error);
  for (int d = 2; d <= 10; d += 2) {
    const auto pair = move_one_check({200 + d / 2, 200 - d / 2}, 0, 1);
    CHECK(pair.first.verdict == Verdict::kPass);
    CHECK(pair.second.verdict == Verdict::kPass);
  }
}

TEST_CASE("sandwich probe") {
  const auto y = sandwich_probe_check(y_graph(100, 2, 3), named_pattern("K3"));
  CHECK(y.verdict == Verdict::kPass);
  CHECK(y.lhs.lo <= 1e-12);
  const auto bad = sandwich_probe_check(y_graph(100, 2, 3), named_pattern("K4"));
  CHECK(bad.verdict == Verdict::kHypothesisNotMet);
}

TEST_CASE("part size window") {
  const auto w = part_size_bound(48, 0, 0, 12, 3);
  CHECK(w.lower == 4.0);
  CHECK(w.upper == 4.0);
  CHECK(w.applicable);
  const auto e = part_size_bound(49, 1, 0, 12, 3);
  CHECK(e.lower == doctest::Approx(4 - std::sqrt(2.0)));
  CHECK(e.upper == doctest::Approx(4 + std::sqrt(2.0)));
  CHECK(!part_size_bound(10, 0, 0, 12, 3).applicable);
}

TEST_CASE("exhaustive max cut matches brute force") {
  std::mt19937 rng(8);
  for (int t = 0; t < 15; ++t) {
    const int n = 4 + static_cast<int>(rng() % 6), r = 2 + static_cast<int>(rng() % 2);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const MaxCut cut = exhaustive_max_cut(g, r);
    CHECK(cut.inside_edges == brute_inside_edges(g, r));
    long long inside = 0;
    std::vector<int> where(n, -1);
    for (std::size_t p = 0; p < cut.parts.size(); ++p)
      for (int v : cut.parts[p]) where[v] = static_cast<int>(p);
    for (const Edge& e : g.edges()) inside += where[e.u] == where[e.v];
    CHECK(inside == cut.inside_edges);
  }
  // Planted K_{8,8} with two extra edges inside a side.
  auto planted = perturbed_multipartite({8, 8}, {Edge(0, 1), Edge(2, 3)}, {Edge(0, 8)});
  CHECK(exhaustive_max_cut(planted.graph, 2).inside_edges == 2);
}

TEST_CASE("shift residual") {
  const EmbeddedSpec equal{{200, 200}, {}};
  const auto eq = shift_residual_check(equal, 0, 1, 0.075);
  CHECK(eq.verdict == Verdict::kPass);

  // With nothing embedded it measures the same move as move_one_check.
  const EmbeddedSpec plain{{202, 198}, {}};
  const auto s = shift_residual_check(plain, 0, 1, 0.075);
  const auto m = move_one_check({202, 198}, 0, 1).first;
  const double lead = 2.0 * 1 * 3 / (2 * 400);
  CHECK(std::abs(std::abs(m.rhs.mid() - lead) - s.lhs.mid()) <= 1e-9);

  const EmbeddedSpec star{{202, 198}, {named_shape("S4")}};
  const auto battery = shift_residual_check(star, 0, 1, 0.075);
  CHECK(battery.verdict != Verdict::kHypothesisNotMet);
  CHECK(!battery.in_regime);
  const auto strict = shift_residual_check(star, 0, 1, 0.075, {kDefaultTol, HypothesisPolicy::kStrict});
  CHECK(strict.verdict == Verdict::kHypothesisNotMet);
  CHECK(shift_residual_check(star, 0, 1, 1.5).verdict == Verdict::kHypothesisNotMet);
}

TEST_CASE("L against the star host") {
  for (int q : {2, 3, 5}) {
    const auto [below, within] = l_vs_t_checks(1000, 2, q);
    CHECK(below.verdict == Verdict::kPass);
    CHECK(within.verdict == Verdict::kPass);
  }
  const auto [a, b] = l_vs_t_checks(1000, 2, 2);
  CHECK(std::abs(b.lhs.mid()) <= 1e-9);
  CHECK(l_vs_t_checks(100, 2, 3, {kDefaultTol, HypothesisPolicy::kStrict}).first.verdict ==
        Verdict::kHypothesisNotMet);
}
