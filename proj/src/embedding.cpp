#include "cgv/embedding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cgv/sampling.hpp"

namespace cgv {

SpatialEmbedding::SpatialEmbedding(Graph host, std::vector<Vec3> coordinates, std::vector<std::vector<Vec3>> polylines)
    : host_(std::move(host)), coordinates_(std::move(coordinates)), polylines_(std::move(polylines)) {
  if (static_cast<int>(coordinates_.size()) != host_.vertex_count())
    throw InputError("embedding needs coordinates for all " + std::to_string(host_.vertex_count()) + " vertices");
  if (polylines_.empty()) polylines_.resize(static_cast<std::size_t>(host_.edge_count()));
  if (static_cast<int>(polylines_.size()) != host_.edge_count())
    throw InputError("polyline list does not match the edge count");
  build_segments();
}

void SpatialEmbedding::build_segments() {
  segments_.clear();
  edge_segments_.assign(static_cast<std::size_t>(host_.edge_count()), {});
  int next_joint = host_.vertex_count();
  for (int e = 0; e < host_.edge_count(); ++e) {
    const Edge& ed = host_.edge(e);
    const auto& mid = polylines_[static_cast<std::size_t>(e)];
    std::vector<std::pair<int, const Vec3*>> pts{{ed.u, &point(ed.u)}};
    for (const auto& p : mid) pts.emplace_back(next_joint++, &p);
    pts.emplace_back(ed.v, &point(ed.v));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      edge_segments_[static_cast<std::size_t>(e)].push_back(static_cast<int>(segments_.size()));
      segments_.push_back({e, static_cast<int>(i), pts[i].first, pts[i + 1].first, *pts[i].second, *pts[i + 1].second});
    }
  }
}

bool SpatialEmbedding::rectilinear() const {
  return std::all_of(polylines_.begin(), polylines_.end(), [](const auto& p) { return p.empty(); });
}

int SpatialEmbedding::stick_count(const Cycle& c) const {
  int n = 0;
  const auto& vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int e = host_.edge_index(vs[i], vs[(i + 1) % vs.size()]);
    n += static_cast<int>(edge_segments(e).size());
  }
  return n;
}

SpatialEmbedding SpatialEmbedding::restrict_to(const Graph& sub) const {
  std::vector<int> to_host;
  std::vector<Vec3> coords;
  for (int v = 0; v < sub.vertex_count(); ++v) {
    auto h = host_.find(sub.label(v));
    if (!h) throw InputError("vertex '" + sub.label(v) + "' is not in the embedded graph");
    to_host.push_back(*h);
    coords.push_back(point(*h));
  }
  std::vector<std::vector<Vec3>> lines;
  for (const auto& e : sub.edges()) {
    int a = to_host[static_cast<std::size_t>(e.u)], b = to_host[static_cast<std::size_t>(e.v)];
    int he = host_.edge_index(a, b);
    if (he < 0) throw InputError("edge " + sub.label(e.u) + "-" + sub.label(e.v) + " is not in the embedded graph");
    auto line = polyline(he);
    if (host_.edge(he).u != a) std::reverse(line.begin(), line.end());
    lines.push_back(std::move(line));
  }
  return SpatialEmbedding(sub, std::move(coords), std::move(lines));
}

SpatialEmbedding transport_embedding(const SpatialEmbedding& e, const Graph& target,
                                     const std::vector<int>& target_to_host) {
  if (static_cast<int>(target_to_host.size()) != target.vertex_count() || target.edge_count() != e.host().edge_count())
    throw InputError("vertex map does not match the embedded graph");
  std::vector<Vec3> coords;
  for (int v : target_to_host) coords.push_back(e.point(v));
  std::vector<std::vector<Vec3>> lines;
  for (const auto& ed : target.edges()) {
    const int a = target_to_host[static_cast<std::size_t>(ed.u)], b = target_to_host[static_cast<std::size_t>(ed.v)];
    const int he = e.host().edge_index(a, b);
    if (he < 0) throw InputError("vertex map is not a graph isomorphism");
    auto line = e.polyline(he);
    if (e.host().edge(he).u != a) std::reverse(line.begin(), line.end());
    lines.push_back(std::move(line));
  }
  return SpatialEmbedding(target, std::move(coords), std::move(lines));
}

bool operator==(const SpatialEmbedding& a, const SpatialEmbedding& b) {
  return a.host_ == b.host_ && a.coordinates_ == b.coordinates_ && a.polylines_ == b.polylines_;
}

bool segments_intersect(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
  const Vec3 d1 = p1 - p0, d2 = q1 - q0, r = q0 - p0;
  const Vec3 n = cross(d1, d2);
  if (sgn(dot(r, n)) != 0) return false;  // skew
  if (!is_zero(n)) {
    const Rational nn = dot(n, n);
    const Rational s = dot(cross(r, d2), n) / nn;
    const Rational t = dot(cross(r, d1), n) / nn;
    return s >= 0 && s <= 1 && t >= 0 && t <= 1;
  }
  if (!is_zero(cross(r, d1))) return false;  // parallel, distinct lines
  const Rational len = dot(d1, d1);
  Rational t0 = dot(r, d1) / len, t1 = dot(q1 - p0, d1) / len;
  if (t1 < t0) std::swap(t0, t1);
  return std::max(t0, Rational(0)) <= std::min(t1, Rational(1));
}

std::vector<std::string> validate_embedding(const SpatialEmbedding& e) {
  std::vector<std::string> out;
  const Graph& g = e.host();
  auto edge_name = [&](int id) { return g.label(g.edge(id).u) + "-" + g.label(g.edge(id).v); };

  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (e.point(a) == e.point(b)) out.push_back("vertices " + g.label(a) + " and " + g.label(b) + " coincide");

  for (int id = 0; id < g.edge_count(); ++id) {
    std::vector<Vec3> pts{e.point(g.edge(id).u)};
    for (const auto& p : e.polyline(id)) pts.push_back(p);
    pts.push_back(e.point(g.edge(id).v));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i] == pts[i + 1]) out.push_back("edge " + edge_name(id) + " has a zero-length segment");
    for (std::size_t i = 0; i + 2 < pts.size(); ++i)
      if (is_zero(cross(pts[i + 1] - pts[i], pts[i + 2] - pts[i + 1])))
        out.push_back("edge " + edge_name(id) + " has three collinear consecutive points");
  }
  if (!out.empty()) return out;

  const auto& segs = e.segments();
  std::set<std::pair<int, int>> reported;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment &s = segs[i], &t = segs[j];
      int shared = -1;
      for (int a : {s.start_id, s.end_id})
        for (int b : {t.start_id, t.end_id})
          if (a == b) shared = a;
      bool bad = false;
      if (shared >= 0) {
        const Vec3& p = shared == s.start_id ? s.start : s.end;
        const Vec3 a = (shared == s.start_id ? s.end : s.start) - p;
        const Vec3 b = (shared == t.start_id ? t.end : t.start) - p;
        bad = is_zero(cross(a, b)) && sgn(dot(a, b)) > 0;
      } else {
        bad = segments_intersect(s.start, s.end, t.start, t.end);
      }
      if (bad && reported.insert({s.edge, t.edge}).second) {
        if (s.edge == t.edge)
          out.push_back("edge " + edge_name(s.edge) + " intersects itself");
        else
          out.push_back("edges " + edge_name(s.edge) + " and " + edge_name(t.edge) + " intersect");
      }
    }
  return out;
}

SpatialEmbedding moment_curve_embedding(const Graph& g, const std::map<std::string, Rational>& t_values) {
  std::vector<Vec3> pts;
  std::set<Rational> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto it = t_values.find(g.label(v));
    if (it == t_values.end()) throw InputError("no t value for vertex '" + g.label(v) + "'");
    if (!seen.insert(it->second).second) throw InputError("duplicate t value " + format_rational(it->second));
    const Rational& t = it->second;
    pts.push_back({t, t * t, t * t * t});
  }
  return SpatialEmbedding(g, std::move(pts));
}

SpatialEmbedding moment_curve_embedding(const Graph& g) {
  std::map<std::string, Rational> t;
  for (int v = 0; v < g.vertex_count(); ++v) t[g.label(v)] = v + 1;
  return moment_curve_embedding(g, t);
}

namespace {

void check_range(std::int64_t range) {
  if (range <= 0) throw InputError("coordinate range must be positive");
  if (range > (std::int64_t{1} << 60)) throw InputError("coordinate range too large");
}

Vec3 draw_point(Rng& rng, std::int64_t range) {
  Vec3 p;
  for (int k = 0; k < 3; ++k) p[k] = Rational(static_cast<long>(rng.uniform(-range, range)));
  return p;
}

template <class Draw>
SpatialEmbedding resample(const Graph& g, std::uint64_t seed, Draw draw) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    SpatialEmbedding e = draw(rng);
    if (validate_embedding(e).empty()) return e;
  }
  throw std::runtime_error("no valid embedding of a " + std::to_string(g.vertex_count()) +
                           "-vertex graph after " + std::to_string(kResampleBudget) + " draws");
}

}  // namespace

SpatialEmbedding random_rectilinear_embedding(const Graph& g, std::uint64_t seed, std::int64_t range) {
  check_range(range);
  return resample(g, seed, [&](Rng& rng) {
    std::vector<Vec3> pts;
    for (int v = 0; v < g.vertex_count(); ++v) pts.push_back(draw_point(rng, range));
    return SpatialEmbedding(g, std::move(pts));
  });
}

SpatialEmbedding random_polyline_embedding(const Graph& g, std::uint64_t seed, std::int64_t range) {
  check_range(range);
  return resample(g, seed, [&](Rng& rng) {
    std::vector<Vec3> pts;
    for (int v = 0; v < g.vertex_count(); ++v) pts.push_back(draw_point(rng, range));
    std::vector<std::vector<Vec3>> lines;
    for (const auto& e : g.edges())
      lines.push_back({midpoint(pts[static_cast<std::size_t>(e.u)], pts[static_cast<std::size_t>(e.v)]) +
                       draw_point(rng, range / 2)});
    return SpatialEmbedding(g, std::move(pts), std::move(lines));
  });
}

nlohmann::json to_json(const SpatialEmbedding& e) {
  const Graph& g = e.host();
  auto point_json = [](const Vec3& p) {
    return nlohmann::json::array({format_rational(p.x), format_rational(p.y), format_rational(p.z)});
  };
  nlohmann::json coords = nlohmann::json::object();
  for (int v = 0; v < g.vertex_count(); ++v) coords[g.label(v)] = point_json(e.point(v));
  nlohmann::json lines = nlohmann::json::object();
  for (int id = 0; id < g.edge_count(); ++id) {
    if (e.polyline(id).empty()) continue;
    auto& arr = lines[g.label(g.edge(id).u) + "-" + g.label(g.edge(id).v)] = nlohmann::json::array();
    for (const auto& p : e.polyline(id)) arr.push_back(point_json(p));
  }
  return {{"graph", to_json(g)}, {"coordinates", coords}, {"polylines", lines}};
}

SpatialEmbedding embedding_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("coordinates"))
    throw InputError("embedding JSON needs \"graph\" and \"coordinates\"");
  Graph g = graph_from_json(j.at("graph"));
  auto parse_point = [](const nlohmann::json& p) {
    if (!p.is_array() || p.size() != 3) throw InputError("a point must be an array of three rationals");
    Vec3 v;
    for (int k = 0; k < 3; ++k) {
      const auto& c = p[static_cast<std::size_t>(k)];
      v[k] = parse_rational(c.is_string() ? c.get<std::string>() : c.dump());
    }
    return v;
  };
  const auto& cj = j.at("coordinates");
  if (!cj.is_object()) throw InputError("\"coordinates\" must be an object");
  std::vector<Vec3> pts;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!cj.contains(g.label(v))) throw InputError("no coordinates for vertex '" + g.label(v) + "'");
    pts.push_back(parse_point(cj.at(g.label(v))));
  }
  if (cj.size() != static_cast<std::size_t>(g.vertex_count())) throw InputError("coordinates for unknown vertices");

  std::vector<std::vector<Vec3>> lines(static_cast<std::size_t>(g.edge_count()));
  if (j.contains("polylines")) {
    for (const auto& [key, arr] : j.at("polylines").items()) {
      int edge = -1;
      bool reversed = false;
      for (std::size_t cut = key.find('-'); cut != std::string::npos && edge < 0; cut = key.find('-', cut + 1)) {
        auto a = g.find(key.substr(0, cut)), b = g.find(key.substr(cut + 1));
        if (a && b && g.edge_index(*a, *b) >= 0) {
          edge = g.edge_index(*a, *b);
          reversed = g.edge(edge).u != *a;
        }
      }
      if (edge < 0) throw InputError("polyline key '" + key + "' does not name an edge");
      if (!arr.is_array()) throw InputError("polyline '" + key + "' must be an array of points");
      auto& line = lines[static_cast<std::size_t>(edge)];
      for (const auto& p : arr) line.push_back(parse_point(p));
      if (reversed) std::reverse(line.begin(), line.end());
    }
  }
  return SpatialEmbedding(std::move(g), std::move(pts), std::move(lines));
}

}  // namespace cgv
