#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cgv {

/// Raised for malformed input: bad graphs, unknown names, out-of-range indices.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 256;

using VertexMask = std::uint64_t;
using EdgeSet = std::bitset<kMaxEdges>;

enum class VertexTag { none, black, white, x, y };

std::string_view to_string(VertexTag tag);
VertexTag parse_tag(std::string_view text);

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple labeled graph. Vertices are dense indices 0..n-1 carrying
/// unique string labels; edges are stored once with u < v, sorted.
class Graph {
 public:
  Graph() = default;

  /// Validates simplicity, label uniqueness and tag totality.
  Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges,
        std::vector<VertexTag> tags = {});

  static Graph from_indices(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges,
                            std::vector<VertexTag> tags = {});

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;
  int index_of(std::string_view label) const;  // throws InputError

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  /// Edge index of {u,v}, or -1.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U; }
  VertexMask neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;

  bool has_tags() const { return !tags_.empty(); }
  VertexTag tag(int v) const { return tags_.empty() ? VertexTag::none : tags_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexTag>& tags() const { return tags_; }

  /// Subgraph with the given edges (by index) and the vertices they touch plus
  /// any vertices listed in `keep`. Labels and tags are inherited.
  Graph edge_subgraph(const std::vector<int>& edge_ids, VertexMask keep = 0) const;
  Graph without_vertex(int v) const;

  /// Sorted degree sequence, descending.
  std::vector<int> degree_sequence() const;

  std::string fresh_label(std::string_view stem = "v") const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void build_index();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<VertexTag> tags_;
  std::vector<VertexMask> adjacency_;
  std::vector<std::int16_t> edge_lookup_;  // n*n
};

Graph complete_graph(int n);

/// Complete multipartite graph. Vertices of part p are labeled consecutively
/// from 1. For parts {3,3,1,1} the standard labeling is used instead: black
/// vertices 1,3,5, white vertices 2,4,6, singletons x and y.
Graph complete_multipartite(const std::vector<int>& part_sizes);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace cgv
