// spectral.cpp
#include "specsat/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "specsat/error.hpp"

namespace specsat {
namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;

// Compensated (Neumaier) accumulator.
struct Sum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

void matvec(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (int v = 0; v < g.n(); ++v) {
    Sum acc;
    const auto row = g.row(v);
    for (int w = 0; w < g.words(); ++w) {
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1)
        acc.add(x[w * 64 + std::countr_zero(bits)]);
    }
    y[v] = acc.value();
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  Sum acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
  return acc.value();
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void normalize(std::vector<double>& a) {
  const double s = norm(a);
  for (double& v : a) v /= s;
}

struct Certificate {
  Interval interval;
  double width() const { return interval.width(); }
};

// Collatz-Wielandt enclosure from the current vector. Quotients are widened by
// 8 units of roundoff, which covers the compensated sum and the division.
Certificate certify(const Graph& g, const std::vector<double>& x, std::vector<double>& ax, int max_degree) {
  matvec(g, x, ax);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool positive = true;
  for (int v = 0; v < g.n(); ++v) {
    if (x[v] <= 0.0) {
      positive = false;
      continue;
    }
    const double q = ax[v] / x[v];
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  lo = Interval::down(lo * (1.0 - 8 * kUnit));
  hi = positive ? Interval::up(hi * (1.0 + 8 * kUnit)) : static_cast<double>(max_degree);
  // Average degree and maximum degree always bracket the spectral radius.
  const double avg = Interval::down(2.0 * static_cast<double>(g.edge_count()) / g.n());
  lo = std::max({lo, avg, 0.0});
  hi = std::min(hi, static_cast<double>(max_degree));
  return {{lo, hi}};
}

struct RitzPair {
  double theta = 0.0;
  std::vector<double> y;
  int matvecs = 0;
};

// One Lanczos cycle with full reorthogonalization, started from x.
RitzPair lanczos(const Graph& g, const std::vector<double>& x, int steps, double scale) {
  const int m = g.n();
  std::vector<std::vector<double>> basis;
  std::vector<double> alpha, beta;
  std::vector<double> q = x;
  normalize(q);
  std::vector<double> w(m);
  RitzPair out;
  for (int j = 0; j < steps; ++j) {
    basis.push_back(q);
    matvec(g, q, w);
    ++out.matvecs;
    alpha.push_back(dot(q, w));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const double c = dot(b, w);
        for (int i = 0; i < m; ++i) w[i] -= c * b[i];
      }
    const double b = norm(w);
    if (j + 1 == steps || b <= 1e-13 * scale) break;
    beta.push_back(b);
    for (int i = 0; i < m; ++i) q[i] = w[i] / b;
  }
  const int k = static_cast<int>(alpha.size());
  Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
  Eigen::VectorXd sub(std::max(k - 1, 0));
  for (int i = 0; i + 1 < k; ++i) sub[i] = beta[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  out.theta = eig.eigenvalues()[k - 1];
  const Eigen::VectorXd s = eig.eigenvectors().col(k - 1);
  out.y.assign(m, 0.0);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i) out.y[i] += s[j] * basis[j][i];
  if (std::accumulate(out.y.begin(), out.y.end(), 0.0) < 0)
    for (double& v : out.y) v = -v;
  normalize(out.y);
  return out;
}

// Connected graph with at least one edge.
SpectralResult solve_connected(const Graph& g, double tol, int max_iter) {
  const int m = g.n();
  int max_degree = 0;
  std::vector<double> x(m);
  for (int v = 0; v < m; ++v) {
    const int d = g.degree(v);
    max_degree = std::max(max_degree, d);
    x[v] = d + 1.0;
  }
  normalize(x);
  std::vector<double> ax(m), tmp(m);
  SpectralResult res;
  const int steps = std::min(m, 24);
  double best_width = std::numeric_limits<double>::infinity();
  int stalls = 0;
  double theta = 0.0;
  Certificate cert{};
  res.converged = false;
  while (res.iterations < max_iter) {
    RitzPair ritz = lanczos(g, x, steps, static_cast<double>(max_degree));
    res.iterations += ritz.matvecs;
    theta = ritz.theta;
    std::vector<double>& y = ritz.y;
    // Roundoff can leave tiny nonpositive entries; a few shifted power steps
    // on |y| restore strict positivity without moving far from the eigenvector.
    for (int guard = 0; *std::min_element(y.begin(), y.end()) <= 0.0 && guard < m; ++guard) {
      for (double& v : y) v = std::abs(v);
      matvec(g, y, tmp);
      ++res.iterations;
      for (int i = 0; i < m; ++i) y[i] += tmp[i];
      normalize(y);
    }
    x = std::move(y);
    cert = certify(g, x, ax, max_degree);
    ++res.iterations;
    if (cert.width() <= tol) {
      res.converged = true;
      break;
    }
    if (cert.width() < 0.5 * best_width) {
      best_width = cert.width();
      stalls = 0;
    } else if (++stalls >= 3) {
      break;
    }
  }
  res.interval = cert.interval;
  res.lambda = std::clamp(theta, cert.interval.lo, cert.interval.hi);
  double r2 = 0.0;
  for (int v = 0; v < m; ++v) r2 += (ax[v] - res.lambda * x[v]) * (ax[v] - res.lambda * x[v]);
  res.residual = std::sqrt(r2);
  res.perron = std::move(x);
  return res;
}

}  // namespace

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::kLess:
      return "less";
    case Ordering::kGreater:
      return "greater";
    case Ordering::kIndeterminate:
      return "indeterminate";
  }
  return "?";
}

SpectralResult spectral_radius(const Graph& g, double tol, int max_iter) {
  require(tol > 0, ErrorKind::kInvalidArgument, "tol must be positive");
  SpectralResult out;
  out.interval = {0.0, 0.0};
  const int n = g.n();
  if (n == 0) return out;
  bool found = false;
  for (const auto& comp : g.components()) {
    if (comp.size() == 1) continue;
    SpectralResult part = solve_connected(g.induced(comp), tol, max_iter);
    out.iterations += part.iterations;
    out.converged = out.converged && part.converged;
    const bool better = !found || part.lambda > out.lambda;
    if (found) {
      out.interval = {std::max(out.interval.lo, part.interval.lo), std::max(out.interval.hi, part.interval.hi)};
    } else {
      out.interval = part.interval;
    }
    if (better) {
      out.lambda = part.lambda;
      out.residual = part.residual;
      out.perron.assign(n, 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) out.perron[comp[i]] = part.perron[i];
    }
    found = true;
  }
  if (!found) {
    out.perron.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    return out;
  }
  out.lambda = std::clamp(out.lambda, out.interval.lo, out.interval.hi);
  return out;
}

CertifiedComparison compare_spectral_radii(const Graph& a, const Graph& b, double tol) {
  CertifiedComparison out;
  if (a == b) {
    out.a = out.b = spectral_radius(a, tol).interval;
    return out;
  }
  for (double t : {tol, tol / 100}) {
    out.a = spectral_radius(a, t).interval;
    out.b = spectral_radius(b, t).interval;
    if (out.a.hi < out.b.lo) {
      out.order = Ordering::kLess;
      return out;
    }
    if (out.b.hi < out.a.lo) {
      out.order = Ordering::kGreater;
      return out;
    }
    out.refined = true;
  }
  return out;
}

Interval spectral_gap(const Graph& a, const Graph& b, double tol) {
  if (a == b) return {0.0, 0.0};
  Interval gap = spectral_radius(b, tol).interval - spectral_radius(a, tol).interval;
  if (gap.lo <= 0.0 && gap.hi >= 0.0)
    gap = spectral_radius(b, tol / 100).interval - spectral_radius(a, tol / 100).interval;
  return gap;
}

double multipartite_lambda(const std::vector<int>& sizes) {
  require(sizes.size() >= 2, ErrorKind::kInvalidArgument, "multipartite_lambda needs at least two parts");
  double n = 0;
  for (int s : sizes) {
    require(s > 0, ErrorKind::kInvalidArgument, "part sizes must be positive");
    n += s;
  }
  // f is strictly decreasing with f(0) = r - 1 > 0 and f(n) < 0.
  auto f = [&](double lambda) {
    Sum acc;
    for (int s : sizes) acc.add(s / (lambda + s));
    acc.add(-1.0);
    return acc.value();
  };
  double lo = 0.0, hi = n;
  while (hi - lo > 1e-12) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return lo + 0.5 * (hi - lo);
}

std::string to_decimal(WalkCount w) {
  if (w == 0) return "0";
  std::string s;
  while (w > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(w % 10)));
    w /= 10;
  }
  return {s.rbegin(), s.rend()};
}

WalkCount walk_count(const Graph& h, int length) {
  require(length >= 1 && length <= 64, ErrorKind::kInvalidArgument, "walk length must lie in 1..64");
  const int n = h.n();
  std::vector<WalkCount> w(n, 1), next(n);
  const WalkCount kMax = ~static_cast<WalkCount>(0);
  for (int step = 1; step < length; ++step) {
    for (int v = 0; v < n; ++v) {
      WalkCount acc = 0;
      for (Vertex u : h.neighbors(v)) {
        if (acc > kMax - w[u]) fail(ErrorKind::kOverflow, "walk count exceeds 128 bits");
        acc += w[u];
      }
      next[v] = acc;
    }
    w.swap(next);
  }
  WalkCount total = 0;
  for (WalkCount c : w) {
    if (total > kMax - c) fail(ErrorKind::kOverflow, "walk count exceeds 128 bits");
    total += c;
  }
  return total;
}

WalkSeries walk_series(const Graph& h, double x, double eps) {
  require(eps > 0, ErrorKind::kInvalidArgument, "eps must be positive");
  const Graph core = h.strip_isolated();
  WalkSeries out;
  if (core.n() == 0) return out;
  const double delta = degree_stats(core).max_degree;
  if (!(x > std::max(delta, 1.0)))
    fail(ErrorKind::kDivergenceRisk,
         "walk series needs x > max degree (x=" + std::to_string(x) + ", max degree=" + std::to_string(delta) + ")");
  const int m = core.n();
  const double ratio = delta / x;
  // y holds A^l 1 / x^l; term l is sum(y)/x = w_{l+1}/x^{l+1}.
  std::vector<double> y(m, 1.0), tmp(m);
  Sum acc;
  double decay = 1.0;  // (delta/x)^l
  for (int l = 1;; ++l) {
    matvec(core, y, tmp);
    for (int i = 0; i < m; ++i) y[i] = tmp[i] / x;
    Sum s;
    for (double v : y) s.add(v);
    acc.add(s.value() / x);
    decay *= ratio;
    // w_{k+1} <= m delta^k, so the terms after l sum to at most
    // m (delta/x)^{l+1} / (x - delta).
    out.tail_bound = m * decay * ratio / (x - delta);
    out.terms = l;
    if (out.tail_bound <= eps) break;
    if (l >= 1000000) fail(ErrorKind::kDivergenceRisk, "walk series converges too slowly");
  }
  out.value = acc.value();
  return out;
}

int EmbeddedSpec::n() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

int EmbeddedSpec::class_edges() const {
  long long total = 0;
  for (const Graph& h : embedded) total += h.edge_count();
  return static_cast<int>(total);
}

PartitionedGraph EmbeddedSpec::realize() const {
  require(embedded.size() <= sizes.size(), ErrorKind::kInvalidArgument, "more embedded graphs than parts");
  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
  std::vector<int> sorted_sizes;
  std::vector<Graph> sorted_embedded;
  for (int i : order) {
    sorted_sizes.push_back(sizes[i]);
    sorted_embedded.push_back(i < static_cast<int>(embedded.size()) ? embedded[i] : Graph(0));
  }
  return embed_in_parts(sorted_sizes, sorted_embedded);
}

double zhang_lambda(const EmbeddedSpec& spec, double tol) {
  require(tol > 0, ErrorKind::kInvalidArgument, "tol must be positive");
  const int r = spec.r();
  require(r >= 2, ErrorKind::kInvalidArgument, "need at least two parts");
  require(spec.embedded.size() <= spec.sizes.size(), ErrorKind::kInvalidArgument, "more embedded graphs than parts");
  for (int s : spec.sizes) require(s > 0, ErrorKind::kInvalidArgument, "part sizes must be positive");
  const int n = spec.n();
  std::vector<Graph> hs(r, Graph(0));
  for (std::size_t i = 0; i < spec.embedded.size(); ++i) {
    hs[i] = spec.embedded[i].strip_isolated();
    require(hs[i].n() <= spec.sizes[i], ErrorKind::kInvalidArgument,
            "embedded graph does not fit in part " + std::to_string(i));
  }
  const double lo0 = std::floor(static_cast<double>(r - 1) * n / r) - 1;
  int max_delta = 0;
  for (const Graph& h : hs)
    if (h.n() > 0) max_delta = std::max(max_delta, degree_stats(h).max_degree);
  if (!(lo0 > max_delta) || !(lo0 > 1))
    fail(ErrorKind::kUnsupportedRegime, "bracket lower end " + std::to_string(lo0) +
                                            " does not exceed the embedded max degree " + std::to_string(max_delta));
  const double eps = tol / (10.0 * r * n);
  // g increases with x: every denominator decreases.
  auto g = [&](double x) {
    Sum acc;
    for (int i = 0; i < r; ++i) acc.add(1.0 / (1.0 + spec.sizes[i] / x + walk_series(hs[i], x, eps).value));
    acc.add(-(r - 1.0));
    return acc.value();
  };
  double lo = lo0, hi = n;
  const double glo = g(lo), ghi = g(hi);
  if (!(glo < 0 && ghi > 0))
    fail(ErrorKind::kNumeric, "no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                  "]: g(lo)=" + std::to_string(glo) + ", g(hi)=" + std::to_string(ghi));
  while (hi - lo > tol / 4) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return lo + 0.5 * (hi - lo);
}

Graph kelmans_rewire(const Graph& g, Vertex u, Vertex v) {
  require(u >= 0 && v >= 0 && u < g.n() && v < g.n(), ErrorKind::kInvalidArgument, "vertex out of range");
  require(u != v, ErrorKind::kInvalidArgument, "rewiring needs two distinct vertices");
  require(g.connected(), ErrorKind::kInvalidArgument, "rewiring needs a connected graph");
  Graph out = g;
  for (Vertex w : g.neighbors(v)) {
    if (w == u || g.has_edge(u, w)) continue;
    out.remove_edge(v, w);
    out.add_edge(u, w);
  }
  return out;
}

}  // namespace specsat
