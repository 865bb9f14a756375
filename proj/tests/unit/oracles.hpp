// oracles.hpp — slow, obviously-correct reference computations for tests.
// Nothing here calls the library's search or solver code.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "specsat/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency(const specsat::Graph& g) {
  Matrix a(g.n(), std::vector<double>(g.n(), 0.0));
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v) a[u][v] = g.has_edge(u, v) ? 1.0 : 0.0;
  return a;
}

// Largest eigenvalue by cyclic Jacobi rotations (dense, n <= ~60).
inline double jacobi_lambda_max(Matrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 0.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  double best = a[0][0];
  for (int i = 1; i < n; ++i) best = std::max(best, a[i][i]);
  return best;
}

inline double jacobi_lambda_max(const specsat::Graph& g) { return jacobi_lambda_max(adjacency(g)); }

// Number of vertex sequences of length `len` along edges: entry sum of A^(len-1).
inline unsigned __int128 walks(const specsat::Graph& g, int len) {
  const int n = g.n();
  std::vector<unsigned __int128> x(n, 1), y(n);
  for (int step = 1; step < len; ++step) {
    std::fill(y.begin(), y.end(), 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (g.has_edge(u, v)) y[u] += x[v];
    x.swap(y);
  }
  unsigned __int128 total = 0;
  for (auto v : x) total += v;
  return total;
}

// Copies of f in g: distinct edge sets of g that are images of E(f) under an
// injective vertex map. Enumerates every ordered placement; fine for f <= 5,
// g <= 10.
inline std::uint64_t copies(const specsat::Graph& f, const specsat::Graph& g) {
  const int k = f.n(), n = g.n();
  const auto fe = f.edges();
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<int> pick(k);
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + std::min(k, n), true);
  if (k > n) return 0;
  do {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask[v]) subset.push_back(v);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::pair<int, int>> image;
      bool ok = true;
      for (const auto& e : fe) {
        int a = subset[perm[e.u]], b = subset[perm[e.v]];
        if (!g.has_edge(a, b)) {
          ok = false;
          break;
        }
        image.emplace_back(std::min(a, b), std::max(a, b));
      }
      if (!ok) continue;
      std::sort(image.begin(), image.end());
      seen.insert(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  // f may have isolated vertices; edge sets alone then identify copies only up
  // to the choice of those vertices, which callers avoid.
  return seen.size();
}

// Smallest labeled-edge bitmask over all relabelings: a brute-force canonical form.
inline std::uint32_t min_relabeled_mask(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  auto bit_of = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<int>(b * (b - 1) / 2 + a);
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  do {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) m |= 1U << bit_of(perm[pairs[i].first], perm[pairs[i].second]);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline specsat::Graph from_mask(int n, std::uint32_t mask) {
  specsat::Graph g(n);
  int i = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++i)
      if ((mask >> i) & 1U) g.add_edge(u, v);
  return g;
}

inline specsat::Graph random_graph(int n, double p, std::mt19937& rng) {
  specsat::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() % 1000000) / 1e6 < p) g.add_edge(u, v);
  return g;
}

// Smallest vertex set meeting every set, by trying all subsets in size order.
inline int min_hitting_set(int n, const std::vector<std::vector<int>>& sets) {
  for (int k = 0; k <= n; ++k) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
      bool all = true;
      for (const auto& s : sets) {
        bool hit = false;
        for (int v : s) hit = hit || mask[v];
        if (!hit) {
          all = false;
          break;
        }
      }
      if (all) return k;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return n;
}

}  // namespace oracle
