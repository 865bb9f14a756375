// canonical.cpp — individualization-refinement canonical labeling.
//
// The search keeps the first leaf and the best (lexicographically largest) leaf.
// A leaf equal in code to either yields an automorphism; the search then jumps
// back to the level where the current path diverged from the matched leaf, and
// orbits of the automorphisms fixing the current prefix prune sibling branches.
#include "specsat/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "specsat/error.hpp"

namespace specsat {
namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

struct Leaf {
  std::vector<std::uint8_t> code;
  std::vector<int> order;
  std::vector<int> path;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.n()), adj_(g.n(), 0) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (g.has_edge(u, v)) adj_[u] |= 1U << v;
  }

  CanonicalForm run() {
    Partition root;
    if (n_ > 0) {
      Cell all(n_);
      std::iota(all.begin(), all.end(), 0);
      root.push_back(std::move(all));
    }
    search(std::move(root), 0);
    CanonicalForm out;
    if (!best_) {  // n == 0
      out.code.bytes = {0};
      return out;
    }
    out.code.bytes = best_->code;
    out.order = best_->order;
    out.leaves = leaves_;
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        std::uint32_t splitter = 0;
        for (int v : cells[s]) splitter |= 1U << v;
        Partition next;
        next.reserve(cells.size() + 4);
        for (const Cell& cell : cells) {
          if (cell.size() == 1) {
            next.push_back(cell);
            continue;
          }
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(cell.size());
          for (int v : cell) keyed.emplace_back(std::popcount(adj_[v] & splitter), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          std::size_t start = 0;
          for (std::size_t i = 1; i <= keyed.size(); ++i) {
            if (i == keyed.size() || keyed[i].first != keyed[start].first) {
              Cell part;
              for (std::size_t k = start; k < i; ++k) part.push_back(keyed[k].second);
              next.push_back(std::move(part));
              start = i;
            }
          }
        }
        if (next.size() != cells.size()) {
          cells = std::move(next);
          changed = true;
        }
      }
    }
  }

  std::vector<std::uint8_t> leaf_code(const std::vector<int>& order) const {
    std::vector<std::uint8_t> code;
    code.push_back(static_cast<std::uint8_t>(n_));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        acc = static_cast<std::uint8_t>((acc << 1) | ((adj_[order[i]] >> order[j]) & 1U));
        if (++nbits == 8) {
          code.push_back(acc);
          acc = 0;
          nbits = 0;
        }
      }
    if (nbits > 0) code.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return code;
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  void record_automorphism(const Leaf& matched, const std::vector<int>& order) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[matched.order[i]] = order[i];
    generators_.push_back(std::move(gamma));
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  /// Orbit representative map under generators that fix path_[0..depth).
  std::vector<int> orbits(int depth) {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int k = 0; k < depth && fixes; ++k) fixes = gamma[path_[k]] == path_[k];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v), b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  int search(Partition cells, int depth) {
    refine(cells);
    if (static_cast<int>(cells.size()) == n_) {
      ++leaves_;
      std::vector<int> order;
      order.reserve(n_);
      for (const Cell& c : cells) order.push_back(c.front());
      auto code = leaf_code(order);
      if (!first_) {
        first_ = Leaf{code, order, path_};
        best_ = first_;
        return kNoJump;
      }
      if (code == first_->code) {
        record_automorphism(*first_, order);
        return divergence(path_, first_->path);
      }
      if (code == best_->code) {
        record_automorphism(*best_, order);
        return divergence(path_, best_->path);
      }
      if (code > best_->code) best_ = Leaf{std::move(code), std::move(order), path_};
      return kNoJump;
    }

    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    const Cell candidates = cells[target];
    std::vector<int> explored;
    for (int v : candidates) {
      if (!explored.empty()) {
        const auto orb = orbits(depth);
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](int w) { return orb[w] == orb[v]; });
        if (redundant) continue;
      }
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back(Cell{v});
        Cell rest;
        for (int w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      path_.push_back(v);
      const int jump = search(std::move(child), depth + 1);
      path_.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> path_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<std::vector<int>> generators_;
  long long leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
  if (g.n() > cap || g.n() > 32)
    fail(ErrorKind::kUnsupportedSize,
         "canonical labeling limited to n <= " + std::to_string(std::min(cap, 32)) + ", got " + std::to_string(g.n()));
  return Canonizer(g).run();
}

CanonicalCode canonical_code(const Graph& g, int cap) { return canonical_form(g, cap).code; }

Graph canonical_graph(const Graph& g, int cap) {
  const CanonicalForm f = canonical_form(g, cap);
  std::vector<int> perm(g.n());
  for (int i = 0; i < g.n(); ++i) perm[f.order[i]] = i;
  return g.relabel(perm);
}

bool isomorphic(const Graph& a, const Graph& b, int cap) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a, cap) == canonical_code(b, cap);
}

}  // namespace specsat
