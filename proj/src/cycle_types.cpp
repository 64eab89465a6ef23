#include "cgv/cycle_types.hpp"

#include <stdexcept>

#include "cgv/named.hpp"

namespace cgv {

std::string_view to_string(CycleType t) {
  switch (t) {
    case CycleType::A: return "A";
    case CycleType::B: return "B";
    case CycleType::C: return "C";
    case CycleType::D: return "D";
  }
  return "?";
}

namespace {

struct Special {
  int x, y, xy;
};

const Special& special() {
  static const Special s = [] {
    const Graph& k = standard_k3311();
    const int x = k.index_of("x"), y = k.index_of("y");
    return Special{x, y, k.edge_index(x, y)};
  }();
  return s;
}

std::pair<VertexTag, VertexTag> neighbor_tags(const Cycle& c, int v) {
  const auto& vs = c.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    if (vs[i] == v) {
      const Graph& k = standard_k3311();
      return {k.tag(vs[(i + n - 1) % n]), k.tag(vs[(i + 1) % n])};
    }
  throw std::logic_error("vertex not on cycle");
}

}  // namespace

CycleType classify_cycle(const Cycle& c) {
  const auto& s = special();
  const bool through_both = c.contains_vertex(s.x) && c.contains_vertex(s.y);
  if (!(c.length() == 8 || (c.length() == 6 && through_both)))
    throw InputError("only 8-cycles and 6-cycles through x and y are classified");
  if (c.contains_edge(s.xy)) return CycleType::C;
  auto [x1, x2] = neighbor_tags(c, s.x);
  if (x1 != x2) return CycleType::A;
  auto [y1, y2] = neighbor_tags(c, s.y);
  if (y1 != y2) throw std::logic_error("mixed colors at y but not at x");
  if (y1 != x1) return CycleType::B;
  if (c.length() == 8) throw std::logic_error("an 8-cycle of type D");
  return CycleType::D;
}

CycleType classify_pair44(const DisjointCyclePair& p) {
  if (p.first.length() != 4 || p.second.length() != 4) throw InputError("only (4,4)-pairs are classified");
  const auto& s = special();
  if (p.first.contains_edge(s.xy) || p.second.contains_edge(s.xy)) return CycleType::C;
  const bool together = p.first.contains_vertex(s.x) == p.first.contains_vertex(s.y);
  return together ? CycleType::A : CycleType::B;
}

const std::vector<Cycle>& gamma6_prime() {
  static const std::vector<Cycle> g = [] {
    const auto& s = special();
    std::vector<Cycle> out;
    for (const auto& c : enumerate_cycles(standard_k3311(), 6)) {
      const bool hx = c.contains_vertex(s.x), hy = c.contains_vertex(s.y);
      if (hx != hy || (hx && hy && classify_cycle(c) != CycleType::D)) out.push_back(c);
    }
    return out;
  }();
  return g;
}

}  // namespace cgv
