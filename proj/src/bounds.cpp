// bounds.cpp
#include "specsat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "specsat/error.hpp"

namespace specsat {
namespace {

Interval pt(double x) { return Interval::point(x); }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Collects unmet conditions. Structural ones always block evaluation; scale
// ones block only under the strict policy.
struct Gate {
  std::vector<std::string> structural;
  std::vector<std::string> scale;

  void need(bool ok, const std::string& what) {
    if (!ok) structural.push_back(what);
  }
  void need_scale(bool ok, const std::string& what) {
    if (!ok) scale.push_back(what);
  }

  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
    return out;
  }

  std::optional<BoundCheck> blocked(const std::string& name, HypothesisPolicy policy) const {
    if (!structural.empty()) return skipped_check(name, join(structural));
    if (!scale.empty() && policy == HypothesisPolicy::kStrict) return skipped_check(name, join(scale));
    return std::nullopt;
  }

  BoundCheck annotate(BoundCheck c) const {
    if (!scale.empty()) {
      c.in_regime = false;
      c.note = "outside stated size regime: " + join(scale) + (c.note.empty() ? "" : "; " + c.note);
    }
    return c;
  }
};

int spread(const std::vector<int>& sizes) {
  return *std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end());
}

void require_descending(const std::vector<int>& sizes) {
  require(!sizes.empty(), ErrorKind::kInvalidArgument, "empty size list");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    require(sizes[i] <= sizes[i - 1], ErrorKind::kInvalidArgument, "sizes must be descending");
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kIndeterminate:
      return "indeterminate";
    case Verdict::kHypothesisNotMet:
      return "hypothesis_not_met";
  }
  return "?";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kLess:
      return "<";
    case Relation::kEqual:
      return "==";
  }
  return "?";
}

BoundCheck make_check(std::string name, Interval lhs, Interval rhs, Relation rel, std::string note) {
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.relation = rel;
  c.note = std::move(note);
  c.margin = rhs.lo - lhs.hi;
  switch (rel) {
    case Relation::kLessEqual:
      c.verdict = lhs.hi <= rhs.lo ? Verdict::kPass : lhs.lo > rhs.hi ? Verdict::kFail : Verdict::kIndeterminate;
      break;
    case Relation::kLess:
      c.verdict = lhs.hi < rhs.lo ? Verdict::kPass : lhs.lo >= rhs.hi ? Verdict::kFail : Verdict::kIndeterminate;
      break;
    case Relation::kEqual: {
      const bool exact = lhs.lo == lhs.hi && rhs.lo == rhs.hi && lhs.lo == rhs.lo;
      const bool apart = lhs.hi < rhs.lo || rhs.hi < lhs.lo;
      c.verdict = exact ? Verdict::kPass : apart ? Verdict::kFail : Verdict::kIndeterminate;
      c.margin = -std::max(lhs.hi - rhs.lo, rhs.hi - lhs.lo);
      break;
    }
  }
  return c;
}

BoundCheck skipped_check(std::string name, std::string why) {
  BoundCheck c;
  c.name = std::move(name);
  c.verdict = Verdict::kHypothesisNotMet;
  c.in_regime = false;
  c.note = std::move(why);
  c.margin = 0.0;
  return c;
}

BoundCheck first_key_residual_i(const PartitionedGraph& pg, const BoundOptions& opt) {
  const std::string name = "first_key_residual_i";
  const int n = pg.n(), r = pg.r();
  const int a1 = pg.alpha1(), a2 = pg.alpha2();
  const int gap = spread(pg.base_sizes);
  Gate gate;
  gate.need(r >= 2, "needs at least two parts");
  gate.need(100 * gap <= n, "n1-nr=" + std::to_string(gap) + " exceeds n/100");
  const double cap = n / std::pow(10.0 * r, 3);
  gate.need_scale(std::max(a1, a2) <= cap, "max(a1,a2)=" + std::to_string(std::max(a1, a2)) + " exceeds n/(10r)^3=" + fmt(cap));
  if (auto skip = gate.blocked(name, opt.policy)) return *skip;

  const Graph k = complete_multipartite(pg.base_sizes);
  const Interval diff = spectral_gap(k, pg.graph, opt.tol);
  const double phi = std::max(gap, 2 * (a1 + a2));
  const Interval shift = pt(2.0 * (a1 - a2)) / pt(n);
  const Interval lhs = abs(diff - shift);
  const Interval rhs = pt(56.0 * (a1 + a2) * phi) / (pt(n) * pt(n));
  return gate.annotate(make_check(name, lhs, rhs, Relation::kLessEqual, "phi=" + fmt(phi)));
}

BoundCheck first_key_bound_ii(const PartitionedGraph& pg, int k, const BoundOptions& opt) {
  const std::string name = "first_key_bound_ii";
  const int n = pg.n(), r = pg.r();
  const int a1 = pg.alpha1(), a2 = pg.alpha2();
  const int gap = spread(pg.base_sizes);
  const int psi = std::max(3 * k, 2 * (a1 + a2));
  Gate gate;
  gate.need(r >= 2, "needs at least two parts");
  require(k >= 0, ErrorKind::kInvalidArgument, "k must be nonnegative");
  gate.need(gap >= 2 * k, "n1-nr=" + std::to_string(gap) + " is below 2k=" + std::to_string(2 * k));
  // With 28 r psi >= n the factor (1 - 28 r psi/n) is no longer a damping term.
  gate.need(28LL * r * psi < n, "28*r*psi=" + std::to_string(28LL * r * psi) + " is not below n");
  const double cap = n / std::pow(10.0 * r, 3);
  gate.need_scale(k <= cap, "k=" + std::to_string(k) + " exceeds n/(10r)^3=" + fmt(cap));
  gate.need_scale(std::max(a1, a2) <= cap, "max(a1,a2)=" + std::to_string(std::max(a1, a2)) + " exceeds n/(10r)^3=" + fmt(cap));
  if (auto skip = gate.blocked(name, opt.policy)) return *skip;

  const Graph t = turan(n, r).graph;
  const Interval lhs = spectral_gap(t, pg.graph, opt.tol);
  const Interval nn = pt(n);
  const Interval damp = pow(pt(1.0) - pt(28.0 * r * psi) / nn, 4);
  const Interval rhs = pt(2.0 * (a1 - a2)) / nn - pt(2.0 * (r - 1) * k * k) / (pt(r) * nn) * damp +
                       pt(56.0 * (a1 + a2) * 7.0 * r * psi) / (nn * nn);
  return gate.annotate(make_check(name, lhs, rhs, Relation::kLessEqual, "psi=" + std::to_string(psi)));
}

std::pair<BoundCheck, BoundCheck> move_one_check(const std::vector<int>& sizes, int i, int j, const BoundOptions& opt,
                                                 std::optional<int> phi_opt) {
  require_descending(sizes);
  const int r = static_cast<int>(sizes.size());
  require(0 <= i && i < j && j < r, ErrorKind::kInvalidArgument, "need part indices 0 <= i < j < r");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int d = sizes[i] - sizes[j];
  const int phi = phi_opt.value_or(d);
  const std::string lower_name = "move_one_lower", upper_name = "move_one_upper";

  Gate gate;
  gate.need(d >= 2, "n_i-n_j=" + std::to_string(d) + " is below 2");
  gate.need(d <= phi, "n_i-n_j exceeds phi");
  if (auto skip = gate.blocked(lower_name, opt.policy))
    return {*skip, skipped_check(upper_name, skip->note)};

  std::vector<int> moved = sizes;
  --moved[i];
  ++moved[j];
  std::sort(moved.rbegin(), moved.rend());
  const Interval delta = spectral_gap(complete_multipartite(sizes), complete_multipartite(moved), opt.tol);
  const Interval nn = pt(n);
  const Interval lead = pt(2.0 * (r - 1) * (d - 1)) / (pt(r) * nn);
  const std::string note = "phi=" + std::to_string(phi);
  BoundCheck lower = make_check(lower_name, lead * pow(pt(1.0) - pt(4.0 * phi) / nn, 4), delta, Relation::kLessEqual, note);
  BoundCheck upper;
  if (20LL * phi <= n) {
    const Interval bound = lead * pow(pt(1.0) + pt(8.0 * phi) / nn, 4) + pt(5.0 * phi) / (nn * nn);
    upper = make_check(upper_name, delta, bound, Relation::kLessEqual, note);
  } else {
    upper = skipped_check(upper_name, "phi=" + std::to_string(phi) + " exceeds n/20");
  }
  return {lower, upper};
}

BoundCheck sandwich_probe_check(const PartitionedGraph& pg, const Pattern& p, double constant) {
  const std::string name = "sandwich_probe";
  if (p.r() != pg.r() || !p.color_critical())
    return skipped_check(name, "pattern must be color-critical with chi = r+1");
  const int n = pg.n();
  const int a1 = pg.alpha1(), a2 = pg.alpha2();
  const double phi = std::max(2 * (a1 + a2), spread(pg.base_sizes));
  const std::uint64_t copies = count_copies(p, pg);
  const std::uint64_t c = c_n_F(n, p);
  const double expected = static_cast<double>(a1) * static_cast<double>(c);
  double ratio = 0.0;
  if (a1 > 0) ratio = std::abs(static_cast<double>(copies) - expected) / (a1 * phi * std::pow(n, p.f - 3));
  else if (copies > 0) ratio = std::numeric_limits<double>::max();
  BoundCheck out = make_check(name, Interval::around(ratio), pt(constant), Relation::kLessEqual,
                              "probe of an existence constant; N_F=" + std::to_string(copies) +
                                  ", a1*c(n,F)=" + std::to_string(static_cast<std::uint64_t>(expected)));
  return out;
}

SizeWindow part_size_bound(long long e_g, long long s, long long t, int n, int r) {
  require(r >= 1 && n >= 1, ErrorKind::kInvalidArgument, "need n, r >= 1");
  require(s >= 0 && t >= 0, ErrorKind::kInvalidArgument, "s and t must be nonnegative");
  SizeWindow w;
  const double radius = std::sqrt(2.0 * static_cast<double>(s + t));
  w.lower = static_cast<double>(n) / r - radius;
  w.upper = static_cast<double>(n) / r + radius;
  w.applicable = static_cast<double>(e_g) >= (1.0 - 1.0 / r) * n * static_cast<double>(n) / 2.0 - static_cast<double>(t);
  return w;
}

MaxCut exhaustive_max_cut(const Graph& g, int r) {
  const int n = g.n();
  require(r >= 1, ErrorKind::kInvalidArgument, "need r >= 1");
  require(n >= 1, ErrorKind::kInvalidArgument, "empty graph");
  require((n - 1) * std::log(static_cast<double>(r)) <= std::log(2e7), ErrorKind::kUnsupportedSize,
          "exhaustive max-cut search too large");
  std::vector<int> part(n, 0), best_part;
  long long best = std::numeric_limits<long long>::max();
  // Depth-first over assignments; vertex 0 sits in part 0 and a vertex may open
  // at most one new part, which removes part relabelings.
  std::function<void(int, long long, int)> go = [&](int v, long long inside, int opened) {
    if (inside >= best) return;
    if (v == n) {
      best = inside;
      best_part = part;
      return;
    }
    for (int p = 0; p < std::min(r, opened + 1); ++p) {
      long long add = 0;
      for (int u = 0; u < v; ++u) add += part[u] == p && g.has_edge(u, v);
      part[v] = p;
      go(v + 1, inside + add, std::max(opened, p + 1));
    }
  };
  part[0] = 0;
  go(1, 0, 1);
  MaxCut out;
  out.inside_edges = best;
  out.parts.resize(r);
  for (int v = 0; v < n; ++v) out.parts[best_part[v]].push_back(v);
  return out;
}

BoundCheck shift_residual_check(const EmbeddedSpec& spec, int i, int j, double eps, const BoundOptions& opt) {
  const std::string name = "shift_residual";
  require_descending(spec.sizes);
  const int r = spec.r();
  require(0 <= i && i < r && 0 <= j && j < r && i != j, ErrorKind::kInvalidArgument, "need distinct part indices");
  const int n = spec.n();
  const int q = spec.class_edges();
  const int d = spec.sizes[i] - spec.sizes[j];
  const int hosted = i < static_cast<int>(spec.embedded.size()) ? spec.embedded[i].strip_isolated().n() : 0;
  const double phi = std::max(spread(spec.sizes), q);
  Gate gate;
  gate.need(r >= 2, "needs at least two parts");
  gate.need(eps > 0 && eps < 1, "eps must lie in (0,1)");
  gate.need(spec.sizes[i] - 1 >= hosted, "part " + std::to_string(i) + " cannot give up a vertex outside its embedded graph");
  gate.need(d >= -1, "n_i - n_j + 1 must be nonnegative");
  const double cap = eps * n / (600.0 * r);
  gate.need_scale(phi <= cap, "phi=" + fmt(phi) + " exceeds eps*n/(600r)=" + fmt(cap));
  if (auto skip = gate.blocked(name, opt.policy)) return *skip;

  EmbeddedSpec moved = spec;
  --moved.sizes[i];
  ++moved.sizes[j];
  const Interval delta = spectral_gap(spec.realize().graph, moved.realize().graph, opt.tol);
  const Interval nn = pt(n);
  const Interval lead = pt(2.0 * (r - 1) * (d - 1)) / (pt(r) * nn);
  const Interval lhs = abs(delta - lead);
  const Interval rhs = pt((d + 1) * eps) / (pt(10.0 * r) * nn);
  return gate.annotate(
      make_check(name, lhs, rhs, Relation::kLessEqual, q == 0 ? "no embedded edges" : "q=" + std::to_string(q)));
}

std::pair<BoundCheck, BoundCheck> l_vs_t_checks(int n, int r, int q, const BoundOptions& opt, double delta) {
  const std::string first = "l_below_t", second = "l_within_t";
  Gate gate_a, gate_b;
  gate_a.need(q >= 1, "q must be at least 1");
  gate_b.need(q >= 1, "q must be at least 1");
  gate_a.need_scale(100LL * r * q <= n, "q exceeds n/(100r)");
  gate_b.need_scale(q <= delta * n, "q exceeds delta*n with delta=" + fmt(delta));

  BoundCheck a, b;
  Graph t;
  auto t_graph = [&]() -> const Graph& {
    if (t.n() == 0) t = t_star_graph(n, r, q).graph;
    return t;
  };
  if (auto skip = gate_a.blocked(first, opt.policy)) {
    a = *skip;
  } else {
    const Graph l = l_graph(n, r, q - 1).graph;
    a = gate_a.annotate(make_check(first, spectral_gap(t_graph(), l, opt.tol), pt(0.0), Relation::kLess,
                                   "lhs is lambda(L_{q-1}) - lambda(T_q)"));
  }
  if (auto skip = gate_b.blocked(second, opt.policy)) {
    b = *skip;
  } else {
    const Graph l = l_graph(n, r, q).graph;
    b = gate_b.annotate(make_check(second, spectral_gap(t_graph(), l, opt.tol), pt(0.9) / pt(n), Relation::kLess,
                                   "lhs is lambda(L_q) - lambda(T_q)"));
  }
  return {a, b};
}

}  // namespace specsat
