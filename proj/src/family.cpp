#include "cgv/family.hpp"

#include <deque>
#include <set>
#include <unordered_map>

#include "cgv/exchange.hpp"

namespace cgv {

std::optional<int> FamilyReport::find(const Graph& g) const {
  auto code = canonical_label(g).code;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].label.code == code) return static_cast<int>(i);
  return std::nullopt;
}

int FamilyReport::delta_family_size() const {
  int n = 0;
  for (const auto& m : members) n += m.in_delta_family ? 1 : 0;
  return n;
}

namespace {

std::set<std::string> delta_closure(const Graph& seed) {
  std::set<std::string> seen{canonical_label(seed).code};
  std::deque<Graph> queue{seed};
  while (!queue.empty()) {
    Graph g = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : triangles(g)) {
      Graph h = delta_y(g, t);
      if (seen.insert(canonical_label(h).code).second) queue.push_back(std::move(h));
    }
  }
  return seen;
}

}  // namespace

FamilyReport generate_family(const Graph& seed, FamilyMoves moves) {
  FamilyReport report;
  const auto delta_codes = delta_closure(seed);
  std::unordered_map<std::string, int> index;
  std::set<FamilyMove> edges;

  auto admit = [&](Graph g, int parent) -> int {
    auto label = canonical_label(g);
    if (auto it = index.find(label.code); it != index.end()) return it->second;
    const int id = static_cast<int>(report.members.size());
    index.emplace(label.code, id);
    bool in_delta = delta_codes.count(label.code) > 0;
    report.members.push_back({std::move(g), std::move(label), in_delta, parent});
    return id;
  };

  admit(seed, -1);
  for (std::size_t cur = 0; cur < report.members.size(); ++cur) {
    const Graph g = report.members[cur].graph;
    const int from = static_cast<int>(cur);
    for (const auto& t : triangles(g)) {
      int to = admit(delta_y(g, t), from);
      edges.insert({from, to});
    }
    if (moves != FamilyMoves::both) continue;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 3) continue;
      int collapsed = 0;
      Graph h = y_delta(g, v, &collapsed);
      if (collapsed > 0) ++report.collapsed_y_delta;
      int to = admit(std::move(h), from);
      // YΔ at v is undone by ΔY on the new triangle, unless edges collapsed.
      if (collapsed == 0) edges.insert({to, from});
    }
  }
  report.delta_y_moves.assign(edges.begin(), edges.end());
  return report;
}

std::optional<DeltaYPath> find_delta_y_path(const Graph& seed, const Graph& target) {
  const auto goal = canonical_label(target).code;
  struct Node {
    Graph graph;
    int parent;
    std::optional<Cycle> via;
  };
  std::vector<Node> nodes{{seed, -1, std::nullopt}};
  std::set<std::string> seen{canonical_label(seed).code};
  std::size_t hit = 0;
  bool found = seen.count(goal) > 0;
  for (std::size_t cur = 0; !found && cur < nodes.size(); ++cur) {
    const Graph g = nodes[cur].graph;
    for (const auto& t : triangles(g)) {
      Graph h = delta_y(g, t);
      auto code = canonical_label(h).code;
      if (!seen.insert(code).second) continue;
      nodes.push_back({std::move(h), static_cast<int>(cur), t});
      if (code == goal) {
        hit = nodes.size() - 1;
        found = true;
        break;
      }
    }
  }
  if (!found) return std::nullopt;

  DeltaYPath path;
  for (int i = static_cast<int>(hit); i >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
    path.graphs.insert(path.graphs.begin(), nodes[static_cast<std::size_t>(i)].graph);
    if (nodes[static_cast<std::size_t>(i)].via) path.triangles.insert(path.triangles.begin(), *nodes[static_cast<std::size_t>(i)].via);
  }
  path.target_to_last = find_isomorphism(target, path.graphs.back());
  return path;
}

}  // namespace cgv
