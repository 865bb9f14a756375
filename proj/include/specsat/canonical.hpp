// canonical.hpp — canonical labeling of small graphs.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "specsat/graph.hpp"

namespace specsat {

inline constexpr int kDefaultCanonicalCap = 16;

/// Isomorphism-invariant key: two graphs share a code iff they are isomorphic.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;
};

struct CanonicalForm {
  CanonicalCode code;
  /// order[i] is the vertex placed at canonical position i.
  std::vector<Vertex> order;
  /// Number of leaves visited by the search (diagnostics).
  long long leaves = 0;
};

/// Equitable refinement, then individualization with automorphism pruning.
/// Throws unsupported-size when g.n() > cap.
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);
CanonicalCode canonical_code(const Graph& g, int cap = kDefaultCanonicalCap);

/// The graph relabelled into canonical order.
Graph canonical_graph(const Graph& g, int cap = kDefaultCanonicalCap);

bool isomorphic(const Graph& a, const Graph& b, int cap = kDefaultCanonicalCap);

}  // namespace specsat
