#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgv/graph.hpp"

namespace cgv {

/// Isomorphism-invariant encoding of a graph (labels and tags ignored).
struct CanonicalLabel {
  /// "n:e:" followed by the hex upper-triangle adjacency bits in canonical order.
  std::string code;
  /// order[i] = vertex of the input graph placed at canonical position i.
  std::vector<int> order;

  friend bool operator==(const CanonicalLabel& a, const CanonicalLabel& b) { return a.code == b.code; }
};

/// Color refinement plus individualization backtracking; returns the least
/// adjacency encoding over all refined leaves. Exponential only on highly
/// symmetric inputs, which stay small for the graphs handled here.
CanonicalLabel canonical_label(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Vertex map a -> b (by index) when the graphs are isomorphic, else empty.
std::vector<int> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace cgv
