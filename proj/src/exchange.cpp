#include "cgv/exchange.hpp"

#include <set>

namespace cgv {

Graph delta_y(const Graph& g, const Cycle& triangle, std::string new_label) {
  if (triangle.length() != 3) throw InputError("ΔY-exchange needs a 3-cycle");
  const auto& t = triangle.vertices();
  for (int i = 0; i < 3; ++i)
    if (t[static_cast<std::size_t>(i)] >= g.vertex_count() ||
        !g.adjacent(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>((i + 1) % 3)]))
      throw InputError("triangle is not present in the graph");

  if (new_label.empty()) new_label = g.fresh_label();
  if (g.find(new_label)) throw InputError("label '" + new_label + "' already in use");

  std::vector<std::string> labels = g.labels();
  labels.push_back(new_label);
  std::vector<VertexTag> tags = g.tags();
  if (!tags.empty()) tags.push_back(VertexTag::none);
  const int center = g.vertex_count();

  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!triangle.contains_edge(e)) edges.emplace_back(g.edge(e).u, g.edge(e).v);
  for (int v : t) edges.emplace_back(v, center);
  return Graph::from_indices(std::move(labels), std::move(edges), std::move(tags));
}

Graph y_delta(const Graph& g, int center, int* collapsed) {
  if (center < 0 || center >= g.vertex_count()) throw InputError("YΔ center out of range");
  if (g.degree(center) != 3)
    throw InputError("YΔ-exchange needs a degree-3 vertex; '" + g.label(center) + "' has degree " +
                     std::to_string(g.degree(center)));
  std::vector<int> nbrs;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.adjacent(center, v)) nbrs.push_back(v);

  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges())
    if (e.u != center && e.v != center) edges.emplace(e.u, e.v);
  int merged = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto key = std::minmax(nbrs[static_cast<std::size_t>(i)], nbrs[static_cast<std::size_t>(j)]);
      if (!edges.insert(key).second) ++merged;
    }
  if (collapsed) *collapsed = merged;

  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::string> labels;
  std::vector<VertexTag> tags;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == center) continue;
    remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
    if (g.has_tags()) tags.push_back(g.tag(v));
  }
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : edges) out.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  return Graph::from_indices(std::move(labels), std::move(out), std::move(tags));
}

Graph suppress_degree_two(const Graph& g) {
  std::vector<int> keep;
  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::string> labels;
  std::vector<VertexTag> tags;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2) continue;
    remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
    if (g.has_tags()) tags.push_back(g.tag(v));
  }
  std::set<std::pair<int, int>> edges;
  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (used[static_cast<std::size_t>(e)]) continue;
    const auto& ed = g.edge(e);
    if (g.degree(ed.u) == 2 && g.degree(ed.v) == 2) continue;  // walked from a branch end
    int start = g.degree(ed.u) == 2 ? ed.v : ed.u;
    int prev = start;
    int cur = start == ed.u ? ed.v : ed.u;
    used[static_cast<std::size_t>(e)] = true;
    while (g.degree(cur) == 2) {
      int next = -1;
      for (int w = 0; w < g.vertex_count(); ++w)
        if (g.adjacent(cur, w) && w != prev) next = w;
      used[static_cast<std::size_t>(g.edge_index(cur, next))] = true;
      prev = cur;
      cur = next;
    }
    if (cur == start) throw InputError("suppressing degree-2 vertices would create a loop");
    auto key = std::minmax(remap[static_cast<std::size_t>(start)], remap[static_cast<std::size_t>(cur)]);
    if (!edges.insert(key).second) throw InputError("suppressing degree-2 vertices would create a multi-edge");
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!used[static_cast<std::size_t>(e)]) throw InputError("graph has a component that is a bare circle");
  return Graph::from_indices(std::move(labels), {edges.begin(), edges.end()}, std::move(tags));
}

int branch_length(const Graph& g, const Cycle& c) {
  int n = 0;
  for (int v : c.vertices())
    if (g.degree(v) >= 3) ++n;
  return n;
}

}  // namespace cgv
