#include "cgv/weights.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgv/cycle_types.hpp"
#include "cgv/exchange.hpp"
#include "cgv/family.hpp"
#include "cgv/named.hpp"
#include "cgv/sampling.hpp"

namespace cgv {

namespace {

std::size_t slot(const std::vector<Cycle>& cycles, const Cycle& c) {
  auto it = std::lower_bound(cycles.begin(), cycles.end(), c);
  if (it == cycles.end() || !(*it == c)) throw InputError("cycle is not in the weight map's domain");
  return static_cast<std::size_t>(it - cycles.begin());
}

}  // namespace

std::int64_t WeightMap::weight(const Cycle& c) const { return weights[slot(cycles, c)]; }
std::int64_t& WeightMap::weight_ref(const Cycle& c) { return weights[slot(cycles, c)]; }

WeightMap zero_weights(const Graph& g) {
  WeightMap w{g, enumerate_cycles(g), {}};
  w.weights.assign(w.cycles.size(), 0);
  return w;
}

WeightMap seed_weights(WeightSeed seed) {
  if (seed == WeightSeed::k7) {
    WeightMap w = zero_weights(complete_graph(7));
    for (std::size_t i = 0; i < w.cycles.size(); ++i) w.weights[i] = w.cycles[i].length() == 7 ? 1 : 0;
    return w;
  }
  const Graph& k = standard_k3311();
  WeightMap w = zero_weights(k);
  const int x = k.index_of("x"), y = k.index_of("y");
  for (std::size_t i = 0; i < w.cycles.size(); ++i) {
    const Cycle& c = w.cycles[i];
    const bool both = c.contains_vertex(x) && c.contains_vertex(y);
    if (c.length() == 8) w.weights[i] = 1;
    else if ((c.length() == 7 || c.length() == 5) && !both) w.weights[i] = -1;
  }
  for (const auto& c : gamma6_prime()) w.weight_ref(c) = -1;
  return w;
}

std::optional<Cycle> delta_y_image(const Graph& g_delta, const Cycle& triangle, const Graph& g_y, const Cycle& c) {
  if (c == triangle) return std::nullopt;
  const int center = g_y.vertex_count() - 1;
  const auto& t = triangle.vertices();
  auto in_triangle = [&](int v) { return std::find(t.begin(), t.end(), v) != t.end(); };
  const auto& vs = c.vertices();
  const std::size_t n = vs.size();
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    const int prev = vs[(i + n - 1) % n], cur = vs[i], next = vs[(i + 1) % n];
    // middle vertex of a two-edge run u-v-w along the triangle: replaced by the center
    if (in_triangle(prev) && in_triangle(cur) && in_triangle(next)) {
      out.push_back(center);
      continue;
    }
    out.push_back(cur);
    if (in_triangle(cur) && in_triangle(next) && !(in_triangle(vs[(i + 2) % n]) || in_triangle(prev)))
      out.push_back(center);
  }
  (void)g_delta;
  return Cycle::from_vertices(g_y, out);
}

WeightMap pushforward_weight(const WeightMap& w, const Cycle& triangle) {
  if (triangle.length() != 3) throw InputError("not a triangle");
  if (!std::binary_search(w.cycles.begin(), w.cycles.end(), triangle))
    throw InputError("triangle is not a cycle of the weighted graph");
  Graph g_y = delta_y(w.host, triangle);
  WeightMap out = zero_weights(g_y);
  for (std::size_t i = 0; i < w.cycles.size(); ++i) {
    auto image = delta_y_image(w.host, triangle, g_y, w.cycles[i]);
    if (image) out.weight_ref(*image) += w.weights[i];
  }
  return out;
}

WeightMap derive_weight_map(const Graph& target, WeightSeed seed) {
  const Graph seed_graph = seed == WeightSeed::k7 ? complete_graph(7) : standard_k3311();
  auto path = find_delta_y_path(seed_graph, target);
  if (!path) throw InputError("target is not reachable from the seed by ΔY moves");
  WeightMap w = seed_weights(seed);
  for (const auto& t : path->triangles) w = pushforward_weight(w, t);
  // transport to the target's labels
  WeightMap out = zero_weights(target);
  const auto& map = path->target_to_last;
  for (std::size_t i = 0; i < out.cycles.size(); ++i) {
    std::vector<int> image;
    for (int v : out.cycles[i].vertices()) image.push_back(map[static_cast<std::size_t>(v)]);
    out.weights[i] = w.weight(Cycle::from_vertices(w.host, image));
  }
  return out;
}

std::int64_t weighted_a2_sum(InvariantCache& inv, const WeightMap& w) {
  if (!(inv.graph() == w.host)) throw InputError("weight map is for a different graph");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < w.cycles.size(); ++i)
    if (w.weights[i] != 0) sum += w.weights[i] * inv.a2(w.cycles[i]);
  return sum;
}

namespace {

Rational orient3(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p) {
  return dot(cross(b - a, c - a), p - a);
}

// Closed triangle abc contains the point p (assumed in its plane).
bool in_triangle(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p) {
  const Vec3 n = cross(b - a, c - a);
  const int s1 = sgn(dot(cross(b - a, p - a), n));
  const int s2 = sgn(dot(cross(c - b, p - b), n));
  const int s3 = sgn(dot(cross(a - c, p - c), n));
  return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

// True when the segment meets the closed triangle anywhere other than at a
// triangle corner that is also a segment endpoint. Coplanar segments count
// as meeting.
bool hits_disk(const Vec3& a, const Vec3& b, const Vec3& c, const Segment& s) {
  const int op = sgn(orient3(a, b, c, s.start)), oq = sgn(orient3(a, b, c, s.end));
  if (op == 0 && oq == 0) return true;
  if (op * oq > 0) return false;
  Vec3 hit;
  if (op == 0) hit = s.start;
  else if (oq == 0) hit = s.end;
  else {
    const Rational dp = orient3(a, b, c, s.start), dq = orient3(a, b, c, s.end);
    hit = s.start + (dp / (dp - dq)) * (s.end - s.start);
  }
  if (!in_triangle(a, b, c, hit)) return false;
  const bool corner = hit == a || hit == b || hit == c;
  const bool endpoint = hit == s.start || hit == s.end;
  return !(corner && endpoint);
}

}  // namespace

SpatialEmbedding flat_y_embedding(const Graph& g_y, int center, std::uint64_t seed, std::int64_t range) {
  if (g_y.degree(center) != 3) throw InputError("center must have degree 3");
  if (range <= 0) throw InputError("coordinate range must be positive");
  std::vector<int> nb;
  for (int v = 0; v < g_y.vertex_count(); ++v)
    if (g_y.adjacent(center, v)) nb.push_back(v);
  Rng rng(seed);
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    std::vector<Vec3> pts(static_cast<std::size_t>(g_y.vertex_count()));
    for (int v = 0; v < g_y.vertex_count(); ++v) {
      if (v == center) continue;
      for (int k = 0; k < 3; ++k) pts[static_cast<std::size_t>(v)][k] = Rational(static_cast<long>(rng.uniform(-range, range)));
    }
    const Vec3 &a = pts[static_cast<std::size_t>(nb[0])], &b = pts[static_cast<std::size_t>(nb[1])],
               &c = pts[static_cast<std::size_t>(nb[2])];
    pts[static_cast<std::size_t>(center)] = Rational(1, 3) * (a + b + c);
    SpatialEmbedding e(g_y, pts);
    if (is_zero(cross(b - a, c - a)) || !validate_embedding(e).empty()) continue;
    bool clear = true;
    for (const auto& s : e.segments()) {
      const Edge& ed = g_y.edge(s.edge);
      if (ed.u == center || ed.v == center) continue;
      if (hits_disk(a, b, c, s)) {
        clear = false;
        break;
      }
    }
    if (clear) return e;
  }
  throw std::runtime_error("no flat-Y embedding found within the resample budget");
}

SpatialEmbedding contract_flat_y(const SpatialEmbedding& f, const Graph& g_delta, const Cycle& triangle) {
  const Graph& g_y = f.host();
  if (g_y.vertex_count() != g_delta.vertex_count() + 1) throw InputError("graphs do not differ by one ΔY move");
  std::vector<Vec3> pts(f.coordinates().begin(), f.coordinates().end() - 1);
  std::vector<std::vector<Vec3>> lines;
  for (const auto& e : g_delta.edges()) {
    const int ye = g_y.edge_index(e.u, e.v);
    if (ye >= 0) lines.push_back(f.polyline(ye));
    else if (triangle.contains_vertex(e.u) && triangle.contains_vertex(e.v)) lines.emplace_back();
    else throw InputError("edge outside the triangle is missing from the Y graph");
  }
  return SpatialEmbedding(g_delta, std::move(pts), std::move(lines));
}

nlohmann::json to_json(const WeightMap& w) {
  auto arr = nlohmann::json::array();
  for (std::size_t i = 0; i < w.cycles.size(); ++i)
    arr.push_back({{"cycle", w.cycles[i].labels(w.host)}, {"weight", w.weights[i]}});
  return {{"graph", to_json(w.host)}, {"weights", arr}};
}

}  // namespace cgv
