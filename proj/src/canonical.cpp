#include "cgv/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cgv {

namespace {

using Coloring = std::vector<int>;

// Recolor by (own color, sorted neighbor colors) until stable. Colors are
// ranks of the signatures, so the result is label-independent.
Coloring refine(const Graph& g, Coloring colors) {
  const int n = g.vertex_count();
  int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colors[static_cast<std::size_t>(v)]};
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (g.adjacent(v, w)) nb.push_back(colors[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[static_cast<std::size_t>(v)] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, k] : rank) k = r++;
    Coloring next(static_cast<std::size_t>(n));
    for (const auto& [s, v] : sig) next[static_cast<std::size_t>(v)] = rank[s];
    const int now = static_cast<int>(rank.size());
    colors = std::move(next);
    if (now == classes) return colors;
    classes = now;
  }
}

std::string encode(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::string bits;
  bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      bits.push_back(g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? '1' : '0');
  static const char* hex = "0123456789abcdef";
  std::string out = std::to_string(n) + ":" + std::to_string(g.edge_count()) + ":";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t k = 0; k < 4; ++k) nibble = nibble * 2 + (i + k < bits.size() && bits[i + k] == '1' ? 1 : 0);
    out.push_back(hex[nibble]);
  }
  return out;
}

struct Search {
  const Graph& g;
  CanonicalLabel best;
  bool found = false;

  void run(const Coloring& colors) {
    const int n = g.vertex_count();
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[colors[static_cast<std::size_t>(v)]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1 && (!target || members.size() < target->size())) target = &members;
    if (!target) {
      std::vector<int> order(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
      std::string code = encode(g, order);
      if (!found || code < best.code) {
        best = {std::move(code), std::move(order)};
        found = true;
      }
      return;
    }
    const int cell_color = colors[static_cast<std::size_t>(target->front())];
    for (int v : *target) {
      Coloring next(static_cast<std::size_t>(n));
      for (int w = 0; w < n; ++w) {
        int c = colors[static_cast<std::size_t>(w)];
        next[static_cast<std::size_t>(w)] = 2 * c + ((c == cell_color && w != v) ? 1 : 0);
      }
      run(refine(g, std::move(next)));
    }
  }
};

}  // namespace

CanonicalLabel canonical_label(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {"0:0:", {}};
  Coloring start(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) start[static_cast<std::size_t>(v)] = g.degree(v);
  Search s{g, {}, false};
  s.run(refine(g, std::move(start)));
  return s.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_label(a) == canonical_label(b);
}

std::vector<int> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return {};
  auto ca = canonical_label(a);
  auto cb = canonical_label(b);
  if (ca.code != cb.code) return {};
  std::vector<int> map(static_cast<std::size_t>(a.vertex_count()));
  for (std::size_t i = 0; i < ca.order.size(); ++i) map[static_cast<std::size_t>(ca.order[i])] = cb.order[i];
  return map;
}

}  // namespace cgv
