#include "cgv/projection.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cgv {

namespace {

struct Point2 {
  Rational u, v;
  friend bool operator<(const Point2& a, const Point2& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); }
};

Rational cross2(const Point2& a, const Point2& b) { return a.u * b.v - a.v * b.u; }
Point2 sub2(const Point2& a, const Point2& b) { return {a.u - b.u, a.v - b.v}; }

// Linear map with kernel d: drop coordinate m (d_m != 0).
Point2 project(const Vec3& p, const Vec3& d, int m) {
  const int k1 = m == 0 ? 1 : 0;
  const int k2 = m == 2 ? 1 : 2;
  return {d[m] * p[k1] - d[k1] * p[m], d[m] * p[k2] - d[k2] * p[m]};
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  return std::min(a.u, b.u) <= p.u && p.u <= std::max(a.u, b.u) && std::min(a.v, b.v) <= p.v &&
         p.v <= std::max(a.v, b.v);
}

}  // namespace

std::optional<Projection> Projection::make(const SpatialEmbedding& e, const Direction& d, std::string* why) {
  auto fail = [&](std::string reason) -> std::optional<Projection> {
    if (why) *why = std::move(reason);
    return std::nullopt;
  };
  if (is_zero(d)) return fail("zero direction");
  const int m = sgn(d.x) != 0 ? 0 : (sgn(d.y) != 0 ? 1 : 2);
  const auto& segs = e.segments();

  std::vector<Point2> a2, b2;
  for (const auto& s : segs) {
    if (is_zero(cross(s.end - s.start, d))) return fail("a segment is parallel to the direction");
    a2.push_back(project(s.start, d, m));
    b2.push_back(project(s.end, d, m));
  }

  Projection p;
  p.host_ = e.host();
  p.direction_ = d;
  std::set<Point2> points;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    p.segment_edge_.push_back(segs[i].edge);
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment &s = segs[i], &t = segs[j];
      int shared = -1;
      for (int x : {s.start_id, s.end_id})
        for (int y : {t.start_id, t.end_id})
          if (x == y) shared = x;
      if (shared >= 0) {
        const Point2& o = shared == s.start_id ? a2[i] : b2[i];
        const Point2 u = sub2(shared == s.start_id ? b2[i] : a2[i], o);
        const Point2 w = sub2(shared == t.start_id ? b2[j] : a2[j], o);
        if (sgn(cross2(u, w)) == 0 && sgn(u.u * w.u + u.v * w.v) > 0)
          return fail("adjacent segments overlap in projection");
        continue;
      }
      const Point2 r = sub2(b2[i], a2[i]), q = sub2(b2[j], a2[j]);
      const int o1 = sgn(cross2(r, sub2(a2[j], a2[i])));
      const int o2 = sgn(cross2(r, sub2(b2[j], a2[i])));
      const int o3 = sgn(cross2(q, sub2(a2[i], a2[j])));
      const int o4 = sgn(cross2(q, sub2(b2[i], a2[j])));
      if (o1 && o2 && o3 && o4) {
        if (o1 == o2 || o3 == o4) continue;
      } else {
        bool touch = (o1 == 0 && on_segment(a2[i], b2[i], a2[j])) || (o2 == 0 && on_segment(a2[i], b2[i], b2[j])) ||
                     (o3 == 0 && on_segment(a2[j], b2[j], a2[i])) || (o4 == 0 && on_segment(a2[j], b2[j], b2[i]));
        if (touch) return fail("a vertex projects onto another strand");
        continue;
      }
      const Rational den = cross2(r, q);
      const Point2 w = sub2(a2[j], a2[i]);
      const Rational si = cross2(w, q) / den;
      const Rational tj = cross2(w, r) / den;
      if (!points.insert({a2[i].u + si * r.u, a2[i].v + si * r.v}).second) return fail("triple point");
      const Vec3 di = s.end - s.start, dj = t.end - t.start;
      const Rational depth_i = dot(s.start + si * di, d), depth_j = dot(t.start + tj * dj, d);
      if (depth_i == depth_j) return fail("segments meet in space");
      const bool i_over = depth_i > depth_j;
      const Vec3& over_dir = i_over ? di : dj;
      const Vec3& under_dir = i_over ? dj : di;
      GraphCrossing c;
      c.over_segment = static_cast<int>(i_over ? i : j);
      c.under_segment = static_cast<int>(i_over ? j : i);
      c.over_param = i_over ? si : tj;
      c.under_param = i_over ? tj : si;
      c.sign = sgn(dot(cross(over_dir, under_dir), d));
      p.crossings_.push_back(std::move(c));
    }
  }

  p.edge_events_.assign(static_cast<std::size_t>(e.host().edge_count()), {});
  for (std::size_t x = 0; x < p.crossings_.size(); ++x) {
    const auto& c = p.crossings_[x];
    for (bool over : {true, false}) {
      const Segment& s = segs[static_cast<std::size_t>(over ? c.over_segment : c.under_segment)];
      p.edge_events_[static_cast<std::size_t>(s.edge)].push_back(
          {Rational(s.index) + (over ? c.over_param : c.under_param), static_cast<int>(x), over});
    }
  }
  for (auto& ev : p.edge_events_)
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.position < b.position; });
  return p;
}

LinkDiagram Projection::diagram(const Cycle& c) const { return diagram(std::vector<Cycle>{c}); }

LinkDiagram Projection::diagram(const DisjointCyclePair& p) const {
  return diagram(std::vector<Cycle>{p.first, p.second});
}

LinkDiagram Projection::diagram(const std::vector<Cycle>& components) const {
  // orientation of each used edge: +1 when traversed from edge.u to edge.v
  std::map<int, int> orient;
  std::vector<std::vector<std::pair<int, bool>>> walks;
  for (const auto& c : components) {
    auto& walk = walks.emplace_back();
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const int a = vs[i], b = vs[(i + 1) % vs.size()];
      const int e = host_.edge_index(a, b);
      if (e < 0) throw InputError("cycle is not in the projected graph");
      const bool forward = host_.edge(e).u == a;
      if (!orient.emplace(e, forward ? 1 : -1).second) throw InputError("diagram components share an edge");
      walk.emplace_back(e, forward);
    }
  }
  auto used = [&](int segment) { return orient.count(segment_edge_[static_cast<std::size_t>(segment)]) > 0; };

  LinkDiagram d;
  std::map<int, int> local;
  for (const auto& walk : walks) {
    auto& comp = d.components.emplace_back();
    for (auto [e, forward] : walk) {
      const auto& ev = edge_events_[static_cast<std::size_t>(e)];
      auto emit = [&](const Event& x) {
        const auto& gc = crossings_[static_cast<std::size_t>(x.crossing)];
        if (!used(gc.over_segment) || !used(gc.under_segment)) return;
        auto [it, fresh] = local.emplace(x.crossing, static_cast<int>(local.size()));
        if (fresh)
          d.signs.push_back(gc.sign * orient[segment_edge_[static_cast<std::size_t>(gc.over_segment)]] *
                            orient[segment_edge_[static_cast<std::size_t>(gc.under_segment)]]);
        comp.push_back({it->second, x.over});
      };
      if (forward)
        std::for_each(ev.begin(), ev.end(), emit);
      else
        std::for_each(ev.rbegin(), ev.rend(), emit);
    }
  }
  return d;
}

Direction candidate_direction(int index) {
  static const std::vector<Direction> order = [] {
    std::vector<Direction> out{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    for (int r = 1; out.size() < static_cast<std::size_t>(kDirectionBudget); ++r)
      for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
          for (int c = -r; c <= r; ++c) {
            if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != r) continue;
            const int first = a != 0 ? a : (b != 0 ? b : c);
            if (first < 0) continue;
            if ((a == 0) + (b == 0) + (c == 0) == 2) continue;  // axes come first
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
          }
    out.resize(static_cast<std::size_t>(kDirectionBudget));
    return out;
  }();
  if (index < 0 || index >= kDirectionBudget) throw std::out_of_range("direction index");
  return order[static_cast<std::size_t>(index)];
}

Projection choose_generic_direction(const SpatialEmbedding& e, int skip) {
  for (int i = 0; i < kDirectionBudget; ++i)
    if (auto p = Projection::make(e, candidate_direction(i)))
      if (skip-- == 0) return std::move(*p);
  throw std::runtime_error("no regular projection among " + std::to_string(kDirectionBudget) + " directions");
}

}  // namespace cgv
