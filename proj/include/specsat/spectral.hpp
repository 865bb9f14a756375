// spectral.hpp — adjacency spectral radius, walk counts and the walk-series
// characteristic equation for multipartite graphs with embedded class-edges.
#pragma once

#include <string>
#include <vector>

#include "specsat/families.hpp"
#include "specsat/graph.hpp"
#include "specsat/interval.hpp"

namespace specsat {

inline constexpr double kDefaultTol = 1e-10;

struct SpectralResult {
  double lambda = 0.0;
  /// Collatz-Wielandt enclosure of the exact spectral radius.
  Interval interval;
  /// Unit vector; positive on the extremal component, zero elsewhere.
  std::vector<double> perron;
  double residual = 0.0;
  /// Matrix-vector products performed.
  int iterations = 0;
  /// False when the interval could not be narrowed to tol (it is still valid).
  bool converged = true;
};

/// Certified spectral radius. Each connected component is solved separately
/// (Krylov-accelerated power iteration), then certified by the quotients
/// (Ax)_v / x_v of a positive vector. Edgeless graphs give lambda = 0.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol, int max_iter = 20000);

enum class Ordering { kLess, kGreater, kIndeterminate };

const char* to_string(Ordering o);

struct CertifiedComparison {
  Ordering order = Ordering::kIndeterminate;
  Interval a;
  Interval b;
  /// True when the first attempt overlapped and a tol/100 re-solve was needed.
  bool refined = false;
};

/// Orders lambda(a) against lambda(b) only when their enclosures are disjoint;
/// overlapping enclosures are re-solved at tol/100 before giving up.
CertifiedComparison compare_spectral_radii(const Graph& a, const Graph& b, double tol = kDefaultTol);

/// Enclosure of lambda(b) - lambda(a); exactly [0, 0] when a == b.
Interval spectral_gap(const Graph& a, const Graph& b, double tol = kDefaultTol);

/// Root of sum_k n_k/(lambda+n_k) = 1, the spectral radius of the complete
/// multipartite graph with the given part sizes.
double multipartite_lambda(const std::vector<int>& sizes);

using WalkCount = unsigned __int128;
std::string to_decimal(WalkCount w);

/// Number of walks visiting `length` vertices (sum of the entries of A^{length-1}).
/// Throws overflow if the count leaves 128 bits.
WalkCount walk_count(const Graph& h, int length);

struct WalkSeries {
  double value = 0.0;
  /// Upper bound on the omitted tail.
  double tail_bound = 0.0;
  int terms = 0;
};

/// sum_{l >= 1} w_{l+1}(h) / x^{l+1}, truncated once the geometric tail bound
/// drops below eps. Requires x > max(Delta(h), 1).
WalkSeries walk_series(const Graph& h, double x, double eps);

/// Part sizes plus a small graph embedded into each part.
struct EmbeddedSpec {
  std::vector<int> sizes;
  std::vector<Graph> embedded;

  int n() const;
  int r() const { return static_cast<int>(sizes.size()); }
  int class_edges() const;
  /// Parts are reordered by size (stable) so the result satisfies the
  /// descending-size convention.
  PartitionedGraph realize() const;
};

/// Largest root of sum_i 1/(1 + n_i/x + S_i(x)) = r - 1 where S_i is the walk
/// series of H_i, by bisection on [floor((r-1)n/r) - 1, n].
double zhang_lambda(const EmbeddedSpec& spec, double tol = kDefaultTol);

/// Moves every edge vw with w outside N(u) + u over to uw.
Graph kelmans_rewire(const Graph& g, Vertex u, Vertex v);

}  // namespace specsat
