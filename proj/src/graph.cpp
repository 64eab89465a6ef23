#include "cgv/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace cgv {

std::string_view to_string(VertexTag tag) {
  switch (tag) {
    case VertexTag::black: return "black";
    case VertexTag::white: return "white";
    case VertexTag::x: return "x";
    case VertexTag::y: return "y";
    case VertexTag::none: break;
  }
  return "none";
}

VertexTag parse_tag(std::string_view text) {
  if (text == "black") return VertexTag::black;
  if (text == "white") return VertexTag::white;
  if (text == "x") return VertexTag::x;
  if (text == "y") return VertexTag::y;
  if (text == "none") return VertexTag::none;
  throw InputError("unknown vertex tag '" + std::string(text) + "'");
}

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges,
             std::vector<VertexTag> tags) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second)
      throw InputError("duplicate vertex label '" + labels[i] + "'");
  }
  std::vector<std::pair<int, int>> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw InputError("edge " + a + "-" + b + " references an undeclared vertex");
    ids.emplace_back(ia->second, ib->second);
  }
  *this = from_indices(std::move(labels), std::move(ids), std::move(tags));
}

Graph Graph::from_indices(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges,
                          std::vector<VertexTag> tags) {
  Graph g;
  const int n = static_cast<int>(labels.size());
  if (n > kMaxVertices) throw InputError("graph exceeds " + std::to_string(kMaxVertices) + " vertices");
  if (!tags.empty() && static_cast<int>(tags.size()) != n) throw InputError("tag assignment must cover every vertex");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n) throw InputError("vertex labels must be unique");
  std::set<Edge> unique;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loop at vertex '" + labels[static_cast<std::size_t>(a)] + "'");
    Edge e{std::min(a, b), std::max(a, b)};
    if (!unique.insert(e).second)
      throw InputError("repeated edge " + labels[static_cast<std::size_t>(e.u)] + "-" +
                       labels[static_cast<std::size_t>(e.v)]);
  }
  if (static_cast<int>(unique.size()) > kMaxEdges) throw InputError("graph exceeds edge capacity");
  g.labels_ = std::move(labels);
  g.edges_.assign(unique.begin(), unique.end());
  if (std::all_of(tags.begin(), tags.end(), [](VertexTag t) { return t == VertexTag::none; })) tags.clear();
  g.tags_ = std::move(tags);
  g.build_index();
  return g;
}

void Graph::build_index() {
  const auto n = labels_.size();
  adjacency_.assign(n, 0);
  edge_lookup_.assign(n * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adjacency_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    adjacency_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
    edge_lookup_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = static_cast<std::int16_t>(i);
    edge_lookup_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = static_cast<std::int16_t>(i);
  }
}

std::optional<int> Graph::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

int Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InputError("no vertex labeled '" + std::string(label) + "'");
}

int Graph::edge_index(int u, int v) const {
  const auto n = labels_.size();
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) return -1;
  return edge_lookup_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d;
  for (int v = 0; v < vertex_count(); ++v) d.push_back(degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph Graph::edge_subgraph(const std::vector<int>& edge_ids, VertexMask keep) const {
  for (int e : edge_ids) {
    const auto& ed = edge(e);
    keep |= (VertexMask{1} << ed.u) | (VertexMask{1} << ed.v);
  }
  std::vector<int> remap(labels_.size(), -1);
  std::vector<std::string> labels;
  std::vector<VertexTag> tags;
  for (int v = 0; v < vertex_count(); ++v) {
    if (!((keep >> v) & 1U)) continue;
    remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(label(v));
    if (has_tags()) tags.push_back(tag(v));
  }
  std::vector<std::pair<int, int>> es;
  for (int e : edge_ids) {
    const auto& ed = edge(e);
    es.emplace_back(remap[static_cast<std::size_t>(ed.u)], remap[static_cast<std::size_t>(ed.v)]);
  }
  return from_indices(std::move(labels), std::move(es), std::move(tags));
}

Graph Graph::without_vertex(int v) const {
  std::vector<int> es;
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[static_cast<std::size_t>(e)].u != v && edges_[static_cast<std::size_t>(e)].v != v) es.push_back(e);
  VertexMask all = (vertex_count() == 64) ? ~VertexMask{0} : ((VertexMask{1} << vertex_count()) - 1);
  return edge_subgraph(es, all & ~(VertexMask{1} << v));
}

std::string Graph::fresh_label(std::string_view stem) const {
  for (int k = vertex_count();; ++k) {
    std::string candidate = std::string(stem) + std::to_string(k);
    if (!find(candidate)) return candidate;
  }
}

bool operator==(const Graph& a, const Graph& b) {
  return a.labels_ == b.labels_ && a.edges_ == b.edges_ && a.tags_ == b.tags_;
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_indices(std::move(labels), std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw InputError("complete multipartite graph needs at least one part");
  for (int s : part_sizes)
    if (s < 1) throw InputError("part sizes must be positive");

  std::vector<std::string> labels;
  std::vector<int> part;
  std::vector<VertexTag> tags;
  const bool standard = part_sizes == std::vector<int>{3, 3, 1, 1};
  if (standard) {
    labels = {"1", "2", "3", "4", "5", "6", "x", "y"};
    part = {0, 1, 0, 1, 0, 1, 2, 3};
    for (int i = 0; i < 6; ++i) tags.push_back(i % 2 == 0 ? VertexTag::black : VertexTag::white);
    tags.push_back(VertexTag::x);
    tags.push_back(VertexTag::y);
  } else {
    int next = 1;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
      for (int k = 0; k < part_sizes[p]; ++k) {
        labels.push_back(std::to_string(next++));
        part.push_back(static_cast<int>(p));
      }
  }
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[static_cast<std::size_t>(i)] != part[static_cast<std::size_t>(j)]) edges.emplace_back(i, j);
  return Graph::from_indices(std::move(labels), std::move(edges), std::move(tags));
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.labels();
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  j["edges"] = std::move(edges);
  if (g.has_tags()) {
    auto tags = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count(); ++v) tags[g.label(v)] = std::string(to_string(g.tag(v)));
    j["tags"] = std::move(tags);
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edges must be label pairs");
      auto str = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
      edges.emplace_back(str(e[0]), str(e[1]));
    }
    std::vector<VertexTag> tags;
    if (j.contains("tags") && !j.at("tags").empty()) {
      const auto& t = j.at("tags");
      for (const auto& l : labels) {
        if (!t.contains(l)) throw InputError("tag assignment must cover every vertex (missing '" + l + "')");
        tags.push_back(parse_tag(t.at(l).get<std::string>()));
      }
    }
    return Graph(std::move(labels), edges, std::move(tags));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed graph JSON: ") + ex.what());
  }
}

}  // namespace cgv
