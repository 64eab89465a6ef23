#pragma once

#include <string>

#include "cgv/cycles.hpp"
#include "cgv/graph.hpp"

namespace cgv {

/// ΔY-exchange: delete the triangle's edges, add a fresh vertex joined to its
/// three corners. `new_label` empty picks an unused label.
Graph delta_y(const Graph& g, const Cycle& triangle, std::string new_label = {});

/// YΔ-exchange at a degree-3 vertex: remove it and join its neighbors
/// pairwise. Neighbor pairs that are already adjacent collapse to a single
/// edge; their number is written to `collapsed` when given.
Graph y_delta(const Graph& g, int center, int* collapsed = nullptr);

/// Suppress every degree-2 vertex (replace u-w-v by u-v). Throws when the
/// result would need a multi-edge or loop.
Graph suppress_degree_two(const Graph& g);

/// Number of vertices of degree >= 3 in the cycle; the cycle's length in the
/// graph obtained by suppressing degree-2 vertices.
int branch_length(const Graph& g, const Cycle& c);

}  // namespace cgv
