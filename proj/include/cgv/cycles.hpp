#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cgv/graph.hpp"

namespace cgv {

/// A cycle of a host graph, stored as a vertex sequence in canonical form:
/// the rotation/reflection whose index sequence is lexicographically least.
class Cycle {
 public:
  /// Validates the sequence against `g` and canonicalizes it.
  static Cycle from_vertices(const Graph& g, std::vector<int> vertices);
  /// Convenience: vertex labels instead of indices.
  static Cycle from_labels(const Graph& g, const std::vector<std::string>& labels);

  const std::vector<int>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()); }
  VertexMask vertex_mask() const { return vertex_mask_; }
  const EdgeSet& edge_set() const { return edges_; }
  bool contains_vertex(int v) const { return (vertex_mask_ >> v) & 1U; }
  bool contains_edge(int e) const { return edges_.test(static_cast<std::size_t>(e)); }

  std::vector<std::string> labels(const Graph& g) const;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices_ == b.vertices_; }
  /// Orders by length, then by canonical sequence.
  friend bool operator<(const Cycle& a, const Cycle& b);

 private:
  std::vector<int> vertices_;
  VertexMask vertex_mask_ = 0;
  EdgeSet edges_;
};

/// Two vertex-disjoint cycles, unordered; `first` precedes `second` in Cycle order.
struct DisjointCyclePair {
  DisjointCyclePair(Cycle a, Cycle b);
  Cycle first;
  Cycle second;
  friend bool operator==(const DisjointCyclePair&, const DisjointCyclePair&) = default;
};

/// All cycles of `g`, sorted; optionally only those with `length` edges.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<int> length = std::nullopt);

/// All unordered pairs of vertex-disjoint cycles. `shape` = (k,l) keeps pairs
/// made of a k-cycle and an l-cycle; (k,l) and (l,k) are the same filter.
std::vector<DisjointCyclePair> enumerate_disjoint_pairs(const Graph& g,
                                                        std::optional<std::pair<int, int>> shape = std::nullopt);

/// Pairs drawn from an already enumerated cycle list.
std::vector<DisjointCyclePair> disjoint_pairs_of(const std::vector<Cycle>& cycles,
                                                 std::optional<std::pair<int, int>> shape = std::nullopt);

/// The triangles of `g` as canonical 3-cycles.
std::vector<Cycle> triangles(const Graph& g);

}  // namespace cgv
