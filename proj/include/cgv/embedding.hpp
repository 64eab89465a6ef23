#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgv/cycles.hpp"
#include "cgv/graph.hpp"
#include "cgv/rational.hpp"

namespace cgv {

/// One straight piece of an embedded edge. Endpoints are identified
/// combinatorially by `start_id`/`end_id`: graph vertex v has id v, the k-th
/// interior point of edge e has a distinct id above the vertex range.
struct Segment {
  int edge = 0;
  int index = 0;  // position along the edge, oriented from edge.u to edge.v
  int start_id = 0;
  int end_id = 0;
  Vec3 start, end;
};

/// A PL embedding of a graph with exact rational coordinates. Edge e is the
/// polyline coordinates[u], polylines[e]..., coordinates[v] for e = {u < v};
/// empty polylines mean a rectilinear embedding.
class SpatialEmbedding {
 public:
  SpatialEmbedding() = default;
  SpatialEmbedding(Graph host, std::vector<Vec3> coordinates, std::vector<std::vector<Vec3>> polylines = {});

  const Graph& host() const { return host_; }
  const Vec3& point(int v) const { return coordinates_.at(static_cast<std::size_t>(v)); }
  const std::vector<Vec3>& coordinates() const { return coordinates_; }
  const std::vector<Vec3>& polyline(int e) const { return polylines_.at(static_cast<std::size_t>(e)); }
  bool rectilinear() const;
  const std::vector<Segment>& segments() const { return segments_; }
  /// Segment ids of edge e in order from edge.u to edge.v.
  const std::vector<int>& edge_segments(int e) const { return edge_segments_.at(static_cast<std::size_t>(e)); }
  /// Number of straight sticks the cycle's image consists of.
  int stick_count(const Cycle& c) const;

  /// Restriction to a subgraph whose labels and edges all occur in the host.
  SpatialEmbedding restrict_to(const Graph& sub) const;

  friend bool operator==(const SpatialEmbedding& a, const SpatialEmbedding& b);

 private:
  void build_segments();

  Graph host_;
  std::vector<Vec3> coordinates_;
  std::vector<std::vector<Vec3>> polylines_;
  std::vector<Segment> segments_;
  std::vector<std::vector<int>> edge_segments_;
};

/// Exact closed-segment intersection test in 3-space.
bool segments_intersect(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1);

/// Violations of the embedding conditions; empty means valid.
std::vector<std::string> validate_embedding(const SpatialEmbedding& e);

/// Vertex v at (t, t^2, t^3).
SpatialEmbedding moment_curve_embedding(const Graph& g, const std::map<std::string, Rational>& t_values);
/// Moment curve with t = 1..n in vertex order.
SpatialEmbedding moment_curve_embedding(const Graph& g);

inline constexpr int kResampleBudget = 1000;

/// Integer vertex coordinates uniform in [-range, range]^3, redrawn until valid.
SpatialEmbedding random_rectilinear_embedding(const Graph& g, std::uint64_t seed, std::int64_t range);
/// As above, then every edge gets one interior point: its midpoint moved by
/// an offset uniform in [-range/2, range/2]^3. Redrawn until valid.
SpatialEmbedding random_polyline_embedding(const Graph& g, std::uint64_t seed, std::int64_t range);

/// The same spatial graph with the vertices of `target` placed where
/// target_to_host sends them; target must be isomorphic to e.host() under it.
SpatialEmbedding transport_embedding(const SpatialEmbedding& e, const Graph& target,
                                     const std::vector<int>& target_to_host);

nlohmann::json to_json(const SpatialEmbedding& e);
SpatialEmbedding embedding_from_json(const nlohmann::json& j);

}  // namespace cgv
