#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgv/canonical.hpp"
#include "cgv/cycles.hpp"
#include "cgv/graph.hpp"

namespace cgv {

enum class FamilyMoves { delta_only, both };

struct FamilyMember {
  Graph graph;
  CanonicalLabel label;
  bool in_delta_family = false;  // reachable from the seed by ΔY moves alone
  int parent = -1;               // BFS discovery parent, -1 for the seed
};

/// A single ΔY-exchange taking member `from` to member `to`.
struct FamilyMove {
  int from = 0;
  int to = 0;
  friend bool operator==(const FamilyMove&, const FamilyMove&) = default;
  friend auto operator<=>(const FamilyMove&, const FamilyMove&) = default;
};

struct FamilyReport {
  std::vector<FamilyMember> members;  // BFS order, seed first
  std::vector<FamilyMove> delta_y_moves;
  int collapsed_y_delta = 0;  // YΔ moves whose result needed multi-edge collapse

  std::optional<int> find(const Graph& g) const;
  int delta_family_size() const;
};

/// Breadth-first closure of `seed` under ΔY (on every triangle) and, for
/// FamilyMoves::both, YΔ (on every degree-3 vertex), deduplicated up to
/// isomorphism.
FamilyReport generate_family(const Graph& seed, FamilyMoves moves);

/// A sequence of ΔY moves turning `seed` into a graph isomorphic to `target`.
struct DeltaYPath {
  std::vector<Graph> graphs;        // graphs[0] = seed, graphs.back() ≅ target
  std::vector<Cycle> triangles;     // triangles[i] is a triangle of graphs[i]
  std::vector<int> target_to_last;  // vertex map target -> graphs.back()
};

/// Shortest ΔY path from seed to target; std::nullopt when target is not in F_Δ(seed).
std::optional<DeltaYPath> find_delta_y_path(const Graph& seed, const Graph& target);

}  // namespace cgv
