#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cgv/cycles.hpp"
#include "cgv/embedding.hpp"
#include "cgv/engine.hpp"

namespace cgv {

/// Integer weight on every cycle of a graph.
struct WeightMap {
  Graph host;
  std::vector<Cycle> cycles;  // all cycles of host, sorted
  std::vector<std::int64_t> weights;

  std::int64_t weight(const Cycle& c) const;
  std::int64_t& weight_ref(const Cycle& c);
};

/// All-zero map over every cycle of g.
WeightMap zero_weights(const Graph& g);

enum class WeightSeed { k7, k3311 };

/// K7: 1 on Hamiltonian cycles (meaningful mod 2). K3311 (standard
/// labeling): +1 on 8-cycles, -1 on 7- and 5-cycles missing x or y and on
/// the 6-cycle class of gamma6_prime(), 0 elsewhere.
WeightMap seed_weights(WeightSeed seed);

/// Image under the ΔY move on `triangle` of a cycle of g_delta other than the
/// triangle itself, as a cycle of g_y = delta_y(g_delta, triangle) (whose new
/// vertex is the last one). A cycle through one triangle edge uv is rerouted
/// u-c-v; one through two triangle edges u-v-w becomes u-c-w.
std::optional<Cycle> delta_y_image(const Graph& g_delta, const Cycle& triangle, const Graph& g_y, const Cycle& c);

/// Sums weights over preimages; the triangle's own weight is dropped.
WeightMap pushforward_weight(const WeightMap& w, const Cycle& triangle);

/// Weights for a member of F_Δ(seed), pushed along a shortest ΔY path and
/// transported to target's labels. Throws InputError when unreachable.
WeightMap derive_weight_map(const Graph& target, WeightSeed seed);

/// Sum of weight * a2 over the cycles with nonzero weight.
std::int64_t weighted_a2_sum(InvariantCache& inv, const WeightMap& w);

/// Rectilinear embedding of g_y with the degree-3 vertex `center` at the
/// centroid of its three neighbors, such that the triangle they span meets
/// the embedded graph only in the three spokes. Redrawn until valid.
SpatialEmbedding flat_y_embedding(const Graph& g_y, int center, std::uint64_t seed, std::int64_t range);

/// The embedding of g_delta obtained from a flat-Y embedding by deleting the
/// center and drawing the triangle edges straight.
SpatialEmbedding contract_flat_y(const SpatialEmbedding& f, const Graph& g_delta, const Cycle& triangle);

nlohmann::json to_json(const WeightMap& w);

}  // namespace cgv
