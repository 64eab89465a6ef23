#include "cgv/cycles.hpp"

#include <algorithm>

namespace cgv {

namespace {

std::vector<int> canonical_rotation(const std::vector<int>& seq) {
  const std::size_t n = seq.size();
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<int> cand(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = dir == 0 ? (start + i) % n : (start + n - i) % n;
        cand[i] = seq[k];
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

}  // namespace

Cycle Cycle::from_vertices(const Graph& g, std::vector<int> vertices) {
  if (vertices.size() < 3) throw InputError("a cycle needs at least three vertices");
  Cycle c;
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("cycle vertex out of range");
    if (c.vertex_mask_ & (VertexMask{1} << v)) throw InputError("cycle repeats vertex '" + g.label(v) + "'");
    c.vertex_mask_ |= VertexMask{1} << v;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int a = vertices[i];
    int b = vertices[(i + 1) % vertices.size()];
    int e = g.edge_index(a, b);
    if (e < 0) throw InputError("cycle uses missing edge " + g.label(a) + "-" + g.label(b));
    c.edges_.set(static_cast<std::size_t>(e));
  }
  c.vertices_ = canonical_rotation(vertices);
  return c;
}

Cycle Cycle::from_labels(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<int> vs;
  for (const auto& l : labels) vs.push_back(g.index_of(l));
  return from_vertices(g, std::move(vs));
}

std::vector<std::string> Cycle::labels(const Graph& g) const {
  std::vector<std::string> out;
  for (int v : vertices_) out.push_back(g.label(v));
  return out;
}

bool operator<(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices_ < b.vertices_;
}

DisjointCyclePair::DisjointCyclePair(Cycle a, Cycle b) : first(std::move(a)), second(std::move(b)) {
  if (first.vertex_mask() & second.vertex_mask()) throw InputError("cycle pair is not vertex-disjoint");
  if (second < first) std::swap(first, second);
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<int> length) {
  // Each cycle is rooted at its smallest vertex and grown through larger
  // vertices; the two traversal directions are merged by requiring
  // path[1] < path.back().
  std::vector<Cycle> out;
  const int n = g.vertex_count();
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(n));
  const int max_len = length.value_or(n);

  auto extend = [&](auto&& self, int root, VertexMask used) -> void {
    const int tail = path.back();
    VertexMask nbrs = g.neighbors(tail);
    const int len = static_cast<int>(path.size());
    if (len >= 3 && ((nbrs >> root) & 1U) && path[1] < path.back()) {
      if (!length || *length == len) out.push_back(Cycle::from_vertices(g, path));
    }
    if (len >= max_len) return;
    for (int w = root + 1; w < n; ++w) {
      if (!((nbrs >> w) & 1U) || ((used >> w) & 1U)) continue;
      path.push_back(w);
      self(self, root, used | (VertexMask{1} << w));
      path.pop_back();
    }
  };

  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    extend(extend, root, VertexMask{1} << root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DisjointCyclePair> disjoint_pairs_of(const std::vector<Cycle>& cycles,
                                                 std::optional<std::pair<int, int>> shape) {
  std::vector<DisjointCyclePair> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto& a = cycles[i];
      const auto& b = cycles[j];
      if (a.vertex_mask() & b.vertex_mask()) continue;
      if (shape) {
        auto [k, l] = *shape;
        bool ok = (a.length() == k && b.length() == l) || (a.length() == l && b.length() == k);
        if (!ok) continue;
      }
      out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<DisjointCyclePair> enumerate_disjoint_pairs(const Graph& g, std::optional<std::pair<int, int>> shape) {
  auto cycles = enumerate_cycles(g);
  if (shape) {
    auto [k, l] = *shape;
    std::erase_if(cycles, [&](const Cycle& c) { return c.length() != k && c.length() != l; });
  }
  return disjoint_pairs_of(cycles, shape);
}

std::vector<Cycle> triangles(const Graph& g) { return enumerate_cycles(g, 3); }

}  // namespace cgv
