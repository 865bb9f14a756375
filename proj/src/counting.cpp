// counting.cpp
#include "specsat/counting.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

#include "specsat/error.hpp"
#include "specsat/graph6.hpp"

namespace specsat {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::kOverflow, "copy count exceeds 64 bits");
  return out;
}

// Pattern vertices in placement order: the seeds first, then breadth-first, so
// every later vertex has an already placed neighbour.
struct Plan {
  std::vector<int> order;
  std::vector<std::vector<int>> back;  // back[k]: earlier positions adjacent to order[k]
};

Plan make_plan(const Graph& f, const std::vector<int>& seeds) {
  Plan plan;
  std::vector<bool> placed(f.n(), false);
  for (int s : seeds) {
    plan.order.push_back(s);
    placed[s] = true;
  }
  for (std::size_t head = 0; head < plan.order.size(); ++head)
    for (Vertex w : f.neighbors(plan.order[head]))
      if (!placed[w]) {
        placed[w] = true;
        plan.order.push_back(w);
      }
  require(static_cast<int>(plan.order.size()) == f.n(), ErrorKind::kInvalidArgument, "pattern must be connected");
  plan.back.resize(f.n());
  for (int k = 0; k < f.n(); ++k)
    for (int j = 0; j < k; ++j)
      if (f.has_edge(plan.order[k], plan.order[j])) plan.back[k].push_back(j);
  return plan;
}

// Injective edge-preserving maps of the pattern into the host, extending a
// fixed image of the first positions of the plan.
class Embedder {
 public:
  Embedder(const Plan& plan, const Graph& host)
      : plan_(plan), host_(host), words_(host.words()), used_(words_, 0), cand_(plan.order.size(), std::vector<std::uint64_t>(words_)) {
    image_.resize(plan.order.size());
  }

  std::uint64_t count(const std::vector<Vertex>& fixed) {
    if (!place_fixed(fixed)) return 0;
    const std::uint64_t out = fixed.size() == plan_.order.size() ? 1 : count_from(static_cast<int>(fixed.size()));
    unplace_fixed(fixed);
    return out;
  }

  template <class Visit>
  void enumerate(const std::vector<Vertex>& fixed, Visit&& visit) {
    if (!place_fixed(fixed)) return;
    enumerate_from(static_cast<int>(fixed.size()), visit);
    unplace_fixed(fixed);
  }

 private:
  bool place_fixed(const std::vector<Vertex>& fixed) {
    for (std::size_t k = 0; k < fixed.size(); ++k) {
      const Vertex v = fixed[k];
      if (used_[v >> 6] >> (v & 63) & 1U) {
        for (std::size_t j = 0; j < k; ++j) used_[fixed[j] >> 6] &= ~(std::uint64_t{1} << (fixed[j] & 63));
        return false;
      }
      for (int j : plan_.back[k])
        if (!host_.has_edge(v, image_[j])) {
          for (std::size_t i = 0; i < k; ++i) used_[fixed[i] >> 6] &= ~(std::uint64_t{1} << (fixed[i] & 63));
          return false;
        }
      image_[k] = v;
      used_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    return true;
  }

  void unplace_fixed(const std::vector<Vertex>& fixed) {
    for (Vertex v : fixed) used_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void candidates(int k) {
    auto& c = cand_[k];
    const auto& back = plan_.back[k];
    if (back.empty()) {
      std::fill(c.begin(), c.end(), ~std::uint64_t{0});
      if (host_.n() % 64) c.back() = (std::uint64_t{1} << (host_.n() % 64)) - 1;
    } else {
      const auto first = host_.row(image_[back[0]]);
      std::copy(first.begin(), first.end(), c.begin());
      for (std::size_t i = 1; i < back.size(); ++i) {
        const auto row = host_.row(image_[back[i]]);
        for (int w = 0; w < words_; ++w) c[w] &= row[w];
      }
    }
    for (int w = 0; w < words_; ++w) c[w] &= ~used_[w];
  }

  std::uint64_t count_from(int k) {
    candidates(k);
    const auto& c = cand_[k];
    if (k + 1 == static_cast<int>(plan_.order.size())) {
      std::uint64_t total = 0;
      for (int w = 0; w < words_; ++w) total += std::popcount(c[w]);
      return total;
    }
    std::uint64_t total = 0;
    for (int w = 0; w < words_; ++w)
      for (std::uint64_t bits = c[w]; bits != 0; bits &= bits - 1) {
        const int v = w * 64 + std::countr_zero(bits);
        image_[k] = v;
        used_[w] |= std::uint64_t{1} << (v & 63);
        total = checked_add(total, count_from(k + 1));
        used_[w] &= ~(std::uint64_t{1} << (v & 63));
      }
    return total;
  }

  template <class Visit>
  void enumerate_from(int k, Visit& visit) {
    if (k == static_cast<int>(plan_.order.size())) {
      visit(image_);
      return;
    }
    candidates(k);
    const std::vector<std::uint64_t> c = cand_[k];
    for (int w = 0; w < words_; ++w)
      for (std::uint64_t bits = c[w]; bits != 0; bits &= bits - 1) {
        const int v = w * 64 + std::countr_zero(bits);
        image_[k] = v;
        used_[w] |= std::uint64_t{1} << (v & 63);
        enumerate_from(k + 1, visit);
        used_[w] &= ~(std::uint64_t{1} << (v & 63));
      }
  }

  const Plan& plan_;
  const Graph& host_;
  int words_;
  std::vector<std::uint64_t> used_;
  std::vector<std::vector<std::uint64_t>> cand_;
  std::vector<Vertex> image_;
};

void require_countable(const Pattern& p) {
  require(p.f >= 1, ErrorKind::kInvalidArgument, "empty pattern");
  require(p.f <= kMaxPatternVertices, ErrorKind::kUnsupportedSize,
          "copy counting supports patterns with at most " + std::to_string(kMaxPatternVertices) + " vertices");
}

int root_vertex(const Graph& f) {
  int best = 0;
  for (int v = 1; v < f.n(); ++v)
    if (f.degree(v) > f.degree(best)) best = v;
  return best;
}

std::uint64_t embeddings_through(const Pattern& p, const Graph& g, Edge e) {
  std::uint64_t total = 0;
  for (const Edge& pe : p.f_graph.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const int a = flip ? pe.v : pe.u;
      const int b = flip ? pe.u : pe.v;
      const Plan plan = make_plan(p.f_graph, {a, b});
      Embedder emb(plan, g);
      total = checked_add(total, emb.count({e.u, e.v}));
    }
  }
  return total;
}

std::uint64_t embeddings(const Pattern& p, const Graph& g) {
  const Plan plan = make_plan(p.f_graph, {root_vertex(p.f_graph)});
  Embedder emb(plan, g);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.n(); ++v) total = checked_add(total, emb.count({v}));
  return total;
}

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, int k, int idx, int used) {
  if (idx == static_cast<int>(order.size())) return true;
  const int v = order[idx];
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int j = 0; j < idx && ok; ++j)
      if (color[order[j]] == c && g.has_edge(v, order[j])) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, order, color, k, idx + 1, std::max(used, c + 1))) return true;
  }
  color[v] = -1;
  return false;
}

int clique_number(const Graph& g) {
  const int n = g.n();
  int best = 0;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      if (mask >> u & 1U)
        for (int v = u + 1; v < n && clique; ++v)
          if ((mask >> v & 1U) && !g.has_edge(u, v)) clique = false;
    if (clique) best = size;
  }
  return best;
}

void count_maps(const Graph& g, std::vector<int>& phi, std::vector<bool>& used, int i, std::uint64_t& total) {
  const int n = g.n();
  if (i == n) {
    ++total;
    return;
  }
  for (int c = 0; c < n; ++c) {
    if (used[c] || g.degree(c) != g.degree(i)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = g.has_edge(i, j) == g.has_edge(c, phi[j]);
    if (!ok) continue;
    phi[i] = c;
    used[c] = true;
    count_maps(g, phi, used, i + 1, total);
    used[c] = false;
  }
}

int parse_index(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorKind::kInvalidArgument, "unrecognized pattern '" + std::string(whole) + "'");
  return value;
}

// Hitting set search over compact vertex ids.
class HittingSet {
 public:
  explicit HittingSet(const std::vector<std::vector<Vertex>>& sets) {
    std::vector<Vertex> ids;
    for (const auto& s : sets) ids.insert(ids.end(), s.begin(), s.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    nv_ = static_cast<int>(ids.size());
    containing_.resize(nv_);
    for (const auto& s : sets) {
      std::vector<int> local;
      for (Vertex v : s) local.push_back(static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
      for (int v : local) containing_[v].push_back(static_cast<int>(sets_.size()));
      sets_.push_back(std::move(local));
    }
    hits_.assign(sets_.size(), 0);
    forbidden_.assign(nv_, false);
    stamp_.assign(nv_, 0);
  }

  int solve() {
    if (sets_.empty()) return 0;
    best_ = greedy();
    branch(0);
    return best_;
  }

 private:
  int greedy() {
    std::vector<int> hits(sets_.size(), 0);
    std::size_t unhit = sets_.size();
    int chosen = 0;
    while (unhit > 0) {
      int pick = -1, gain = -1;
      for (int v = 0; v < nv_; ++v) {
        int g = 0;
        for (int s : containing_[v]) g += hits[s] == 0;
        if (g > gain) gain = g, pick = v;
      }
      for (int s : containing_[pick])
        if (hits[s]++ == 0) --unhit;
      ++chosen;
    }
    return chosen;
  }

  // Vertex-disjoint unhit sets each need their own vertex.
  int lower_bound() {
    ++epoch_;
    int packing = 0, unhit = 0;
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      if (hits_[s]) continue;
      ++unhit;
      bool free = true;
      for (int v : sets_[s]) free = free && stamp_[v] != epoch_;
      if (!free) continue;
      ++packing;
      for (int v : sets_[s]) stamp_[v] = epoch_;
    }
    int max_degree = 1;
    for (int v = 0; v < nv_; ++v) {
      if (forbidden_[v]) continue;
      int d = 0;
      for (int s : containing_[v]) d += hits_[s] == 0;
      max_degree = std::max(max_degree, d);
    }
    return std::max(packing, (unhit + max_degree - 1) / max_degree);
  }

  void branch(int depth) {
    int target = -1;
    for (std::size_t s = 0; s < sets_.size(); ++s)
      if (!hits_[s]) {
        target = static_cast<int>(s);
        break;
      }
    if (target < 0) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + lower_bound() >= best_) return;
    std::vector<int> options;
    for (int v : sets_[target])
      if (!forbidden_[v]) options.push_back(v);
    std::sort(options.begin(), options.end(), [&](int a, int b) {
      auto gain = [&](int v) {
        int g = 0;
        for (int s : containing_[v]) g += hits_[s] == 0;
        return g;
      };
      const int ga = gain(a), gb = gain(b);
      return ga != gb ? ga > gb : a < b;
    });
    std::vector<int> excluded;
    for (int v : options) {
      for (int s : containing_[v]) ++hits_[s];
      branch(depth + 1);
      for (int s : containing_[v]) --hits_[s];
      // Later branches need not revisit v: any solution containing it was seen.
      forbidden_[v] = true;
      excluded.push_back(v);
      if (depth + 1 >= best_) break;
    }
    for (int v : excluded) forbidden_[v] = false;
  }

  int nv_ = 0;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> hits_;
  std::vector<bool> forbidden_;
  std::vector<int> stamp_;
  int epoch_ = 0;
  int best_ = 0;
};

void collect_sets_through(const Pattern& p, const Graph& g, Edge e, std::set<std::vector<Vertex>>& out) {
  for (const Edge& pe : p.f_graph.edges())
    for (int flip = 0; flip < 2; ++flip) {
      const int a = flip ? pe.v : pe.u;
      const int b = flip ? pe.u : pe.v;
      const Plan plan = make_plan(p.f_graph, {a, b});
      Embedder emb(plan, g);
      emb.enumerate({e.u, e.v}, [&](const std::vector<Vertex>& image) {
        std::vector<Vertex> s = image;
        std::sort(s.begin(), s.end());
        out.insert(std::move(s));
      });
    }
}

}  // namespace

int chromatic_number(const Graph& g) {
  require(g.n() <= kMaxChromaticVertices, ErrorKind::kUnsupportedSize,
          "chromatic number limited to n <= " + std::to_string(kMaxChromaticVertices));
  if (g.n() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.n(), -1);
  for (int k = std::max(2, clique_number(g));; ++k)
    if (colorable(g, order, color, k, 0, 0)) return k;
}

std::uint64_t count_automorphisms(const Graph& g) {
  std::vector<int> phi(g.n());
  std::vector<bool> used(g.n(), false);
  std::uint64_t total = 0;
  count_maps(g, phi, used, 0, total);
  return total;
}

Pattern analyze_pattern(const Graph& g, std::string name) {
  require(g.n() >= 1, ErrorKind::kInvalidArgument, "empty pattern");
  require(g.n() <= kMaxChromaticVertices, ErrorKind::kUnsupportedSize,
          "patterns limited to n <= " + std::to_string(kMaxChromaticVertices));
  require(g.connected(), ErrorKind::kInvalidArgument, "pattern must be connected");
  Pattern p;
  p.f_graph = g;
  p.f = g.n();
  p.chi = chromatic_number(g);
  for (const Edge& e : g.edges()) {
    Graph h = g;
    h.remove_edge(e.u, e.v);
    if (chromatic_number(h) < p.chi) p.critical_edges.push_back(e);
  }
  p.aut = count_automorphisms(g);
  p.name = name.empty() ? emit_graph6(g) : std::move(name);
  return p;
}

Pattern named_pattern(std::string_view name) {
  if (name.substr(0, 3) == "g6:") return analyze_pattern(parse_graph6(name.substr(3)), std::string(name));
  if (name.empty()) fail(ErrorKind::kInvalidArgument, "empty pattern name");
  const int k = parse_index(name.substr(1), name);
  Graph g;
  switch (name[0]) {
    case 'K':
      g = Graph::complete(k);
      break;
    case 'C':
      g = Graph::cycle(k);
      break;
    case 'P':
      g = Graph::path(k);
      break;
    case 'S':
      g = Graph::star(k);
      break;
    case 'B': {
      g = Graph(k + 2);
      g.add_edge(0, 1);
      for (int i = 0; i < k; ++i) {
        g.add_edge(0, i + 2);
        g.add_edge(1, i + 2);
      }
      break;
    }
    case 'W': {
      require(k >= 3, ErrorKind::kInvalidArgument, "wheel needs at least 3 rim vertices");
      g = Graph(k + 1);
      for (int i = 0; i < k; ++i) {
        g.add_edge(0, i + 1);
        g.add_edge(i + 1, (i + 1) % k + 1);
      }
      break;
    }
    default:
      fail(ErrorKind::kInvalidArgument, "unrecognized pattern '" + std::string(name) + "'");
  }
  return analyze_pattern(g, std::string(name));
}

std::uint64_t count_copies(const Pattern& p, const Graph& g) {
  require_countable(p);
  const std::uint64_t emb = embeddings(p, g);
  return emb / p.aut;
}

std::uint64_t count_copies(const Pattern& p, const PartitionedGraph& pg) {
  require_countable(p);
  if (p.chi <= pg.r()) return count_copies(p, pg.graph);
  Graph h = pg.graph;
  std::uint64_t total = 0;
  for (const Edge& e : classify_edges(pg).class_edges) {
    total = checked_add(total, embeddings_through(p, h, e) / p.aut);
    h.remove_edge(e.u, e.v);
  }
  return total;
}

std::uint64_t count_copies_through_edge(const Pattern& p, const Graph& g, Edge e) {
  require_countable(p);
  require(e.u >= 0 && e.v < g.n() && e.u != e.v && g.has_edge(e.u, e.v), ErrorKind::kInvalidArgument,
          "edge " + to_string(e) + " is not in the graph");
  return embeddings_through(p, g, e) / p.aut;
}

std::uint64_t c_parts_F(const std::vector<int>& sizes, const Pattern& p) {
  require(p.color_critical(), ErrorKind::kInvalidArgument, "pattern " + p.name + " is not color-critical");
  require(p.r() >= 2, ErrorKind::kInvalidArgument, "pattern needs chromatic number at least 3");
  require(static_cast<int>(sizes.size()) == p.r(), ErrorKind::kInvalidArgument,
          "expected " + std::to_string(p.r()) + " part sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    require(sizes[i] <= sizes[i - 1], ErrorKind::kInvalidArgument, "sizes must be descending");
  require(sizes.front() >= 2, ErrorKind::kInvalidArgument, "first part too small for an edge");
  const PartitionedGraph pg = embed_in_parts(sizes, {Graph::matching(1)});
  return count_copies_through_edge(p, pg.graph, pg.added_class_edges.front());
}

std::uint64_t c_n_F(int n, const Pattern& p) {
  require(p.color_critical(), ErrorKind::kInvalidArgument, "pattern " + p.name + " is not color-critical");
  require(p.r() >= 2, ErrorKind::kInvalidArgument, "pattern needs chromatic number at least 3");
  const auto sizes = turan_sizes(n, p.r());
  require(sizes.front() >= 2, ErrorKind::kInvalidArgument, "no part can host an edge");
  std::uint64_t best = c_parts_F(sizes, p);
  if (sizes.back() >= 2 && sizes.back() != sizes.front()) {
    std::vector<Graph> embedded(sizes.size(), Graph(0));
    embedded.back() = Graph::matching(1);
    const PartitionedGraph pg = embed_in_parts(sizes, embedded);
    best = std::min(best, count_copies_through_edge(p, pg.graph, pg.added_class_edges.front()));
  }
  return best;
}

std::vector<std::vector<Vertex>> copy_vertex_sets(const Pattern& p, const Graph& g) {
  require_countable(p);
  require(g.n() <= kMaxCoveringVertices, ErrorKind::kUnsupportedSize,
          "generic copy enumeration limited to n <= " + std::to_string(kMaxCoveringVertices));
  require(count_copies(p, g) <= kMaxCopySets, ErrorKind::kUnsupportedSize, "more than 10^6 copies");
  std::set<std::vector<Vertex>> found;
  const Plan plan = make_plan(p.f_graph, {root_vertex(p.f_graph)});
  Embedder emb(plan, g);
  for (Vertex v = 0; v < g.n(); ++v)
    emb.enumerate({v}, [&](const std::vector<Vertex>& image) {
      std::vector<Vertex> s = image;
      std::sort(s.begin(), s.end());
      found.insert(std::move(s));
    });
  return {found.begin(), found.end()};
}

std::vector<std::vector<Vertex>> copy_vertex_sets(const Pattern& p, const PartitionedGraph& pg) {
  require_countable(p);
  if (p.chi <= pg.r()) return copy_vertex_sets(p, pg.graph);
  require(count_copies(p, pg) <= kMaxCopySets, ErrorKind::kUnsupportedSize, "more than 10^6 copies");
  std::set<std::vector<Vertex>> found;
  for (const Edge& e : classify_edges(pg).class_edges) collect_sets_through(p, pg.graph, e, found);
  return {found.begin(), found.end()};
}

int min_hitting_set(const std::vector<std::vector<Vertex>>& sets) {
  for (const auto& s : sets) require(!s.empty(), ErrorKind::kInvalidArgument, "empty hyperedge cannot be hit");
  return HittingSet(sets).solve();
}

int covering_number(const Pattern& p, const Graph& g) { return min_hitting_set(copy_vertex_sets(p, g)); }

int covering_number(const Pattern& p, const PartitionedGraph& pg) { return min_hitting_set(copy_vertex_sets(p, pg)); }

AlphaEstimate estimate_alpha_F(const Pattern& p, const std::vector<int>& n_list) {
  require(n_list.size() >= 3, ErrorKind::kInvalidArgument, "need at least three sample sizes");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    require(n_list[i] > n_list[i - 1], ErrorKind::kInvalidArgument, "sample sizes must be strictly ascending");
  AlphaEstimate out;
  double sxy = 0, sxx = 0;
  std::vector<double> xs;
  for (int n : n_list) {
    const std::uint64_t c = c_n_F(n, p);
    const double x = std::pow(static_cast<double>(n), p.f - 2);
    out.samples.push_back(c);
    xs.push_back(x);
    sxy += x * static_cast<double>(c);
    sxx += x * x;
  }
  out.alpha = sxy / sxx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fit = out.alpha * xs[i];
    out.max_relative_residual =
        std::max(out.max_relative_residual, std::abs(static_cast<double>(out.samples[i]) - fit) / fit);
  }
  return out;
}

}  // namespace specsat
