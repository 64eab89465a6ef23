#include <doctest.h>

#include "cgv/embedding.hpp"
#include "cgv/invariants.hpp"
#include "cgv/named.hpp"
#include "cgv/projection.hpp"
#include "cgv/sampling.hpp"

using namespace cgv;

namespace {

Vec3 v3(long x, long y, long z) { return {x, y, z}; }

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

// Two triangles, the second piercing the first once.
SpatialEmbedding hopf_triangles() {
  Graph g({"a1", "a2", "a3", "b1", "b2", "b3"},
          {{"a1", "a2"}, {"a2", "a3"}, {"a1", "a3"}, {"b1", "b2"}, {"b2", "b3"}, {"b1", "b3"}});
  return SpatialEmbedding(g, {v3(0, 0, 0), v3(4, 0, 0), v3(0, 4, 0), v3(1, 1, -2), v3(1, 1, 2), v3(-3, 1, -1)});
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("sampling is deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    auto x = a.uniform(-3, 3);
    CHECK(x == b.uniform(-3, 3));
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
  CHECK(sample_seed(1, 0) != sample_seed(1, 1));
  CHECK(sample_seed(1, 0) != sample_seed(2, 0));
}

TEST_CASE("moment curve embeddings") {
  auto e = moment_curve_embedding(complete_graph(6));
  CHECK(validate_embedding(e).empty());
  CHECK(e.rectilinear());
  CHECK(validate_embedding(moment_curve_embedding(complete_graph(7))).empty());
  CHECK(validate_embedding(moment_curve_embedding(standard_k3311())).empty());
  auto k2 = complete_graph(2);
  CHECK_THROWS_AS(moment_curve_embedding(k2, {{"1", 1}, {"2", 1}}), InputError);
  CHECK_THROWS_AS(moment_curve_embedding(k2, {{"1", 1}}), InputError);
}

TEST_CASE("validation finds degenerate input") {
  Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  auto crossing = SpatialEmbedding(g, {v3(0, 0, 0), v3(2, 0, 0), v3(1, -1, 0), v3(1, 1, 0)});
  auto v = validate_embedding(crossing);
  REQUIRE(v.size() == 1);
  CHECK(mentions(v, "a-b"));
  CHECK(mentions(v, "c-d"));
  auto touching = SpatialEmbedding(g, {v3(0, 0, 0), v3(2, 0, 0), v3(1, 0, 0), v3(1, 1, 0)});
  CHECK_FALSE(validate_embedding(touching).empty());
  auto coincide = SpatialEmbedding(g, {v3(0, 0, 0), v3(2, 0, 0), v3(0, 0, 0), v3(1, 1, 1)});
  CHECK(mentions(validate_embedding(coincide), "coincide"));
  auto skew = SpatialEmbedding(g, {v3(0, 0, 0), v3(2, 0, 0), v3(1, -1, 1), v3(1, 1, 1)});
  CHECK(validate_embedding(skew).empty());

  Graph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto fold = SpatialEmbedding(path, {v3(0, 0, 0), v3(2, 0, 0), v3(1, 0, 0)});
  CHECK_FALSE(validate_embedding(fold).empty());
  auto straight = SpatialEmbedding(path, {v3(0, 0, 0), v3(2, 0, 0), v3(4, 0, 0)});
  CHECK(validate_embedding(straight).empty());
  auto bent = SpatialEmbedding(path, {v3(0, 0, 0), v3(2, 0, 0), v3(4, 0, 0)}, {{v3(1, 0, 0)}, {}});
  CHECK(mentions(validate_embedding(bent), "collinear"));
  CHECK_THROWS_AS(SpatialEmbedding(path, {v3(0, 0, 0)}), InputError);
}

TEST_CASE("random embeddings") {
  const auto& k = standard_k3311();
  auto a = random_rectilinear_embedding(k, 1, 1000000);
  auto b = random_rectilinear_embedding(k, 1, 1000000);
  CHECK(a == b);
  CHECK(validate_embedding(a).empty());
  CHECK_FALSE(a == random_rectilinear_embedding(k, 2, 1000000));
  CHECK_THROWS_AS(random_rectilinear_embedding(k, 1, 0), InputError);
  auto p = random_polyline_embedding(k, 3, 1000);
  CHECK_FALSE(p.rectilinear());
  CHECK(validate_embedding(p).empty());
  CHECK(p.segments().size() == 44);
  CHECK(p.stick_count(enumerate_cycles(k, 8).front()) == 16);
  // tiny range: the points of K7 cannot be in general position often, but resampling copes
  CHECK(validate_embedding(random_rectilinear_embedding(complete_graph(7), 5, 3)).empty());
  CHECK_THROWS(random_polyline_embedding(complete_graph(4), 5, 1));  // offsets collapse to 0: always collinear
}

TEST_CASE("embedding JSON round trip") {
  auto p = random_polyline_embedding(standard_k3311(), 9, 50);
  auto j = to_json(p);
  auto back = embedding_from_json(j);
  CHECK(back == p);
  CHECK(to_json(back).dump() == j.dump());
  auto text = R"({"graph":{"vertices":["a","b"],"edges":[["b","a"]]},
                  "coordinates":{"a":["0","0","0"],"b":["1/2","3","2"]},
                  "polylines":{"b-a":[["1","1","1"],["2","1","1"]]}})";
  auto e = embedding_from_json(nlohmann::json::parse(text));
  CHECK(e.polyline(0).front() == v3(2, 1, 1));  // stored from a towards b
  CHECK(e.point(1).x == Rational(1, 2));
  CHECK_THROWS_AS(embedding_from_json(nlohmann::json::parse(R"({"graph":{"vertices":["a"],"edges":[]},"coordinates":{}})")),
                  InputError);
  CHECK_THROWS_AS(
      embedding_from_json(nlohmann::json::parse(
          R"({"graph":{"vertices":["a"],"edges":[]},"coordinates":{"a":["0","x","0"]}})")),
      InputError);
}

TEST_CASE("restriction to subgraphs") {
  auto e = random_polyline_embedding(standard_k3311(), 4, 100);
  auto gx = named_subgraph("Gx");
  auto r = e.restrict_to(gx);
  CHECK(r.host() == gx);
  CHECK(validate_embedding(r).empty());
  for (int v = 0; v < gx.vertex_count(); ++v) CHECK(r.point(v) == e.point(e.host().index_of(gx.label(v))));
  CHECK_THROWS_AS(e.restrict_to(complete_graph(3)), InputError);  // 1-3 is not an edge of K3311
}

TEST_CASE("generic directions") {
  Graph k2 = complete_graph(2);
  auto vertical = SpatialEmbedding(k2, {v3(0, 0, 0), v3(0, 0, 1)});
  CHECK_FALSE(Projection::make(vertical, candidate_direction(0)));
  CHECK(choose_generic_direction(vertical).direction() == v3(0, 1, 0));

  auto e = moment_curve_embedding(complete_graph(6));
  auto p = choose_generic_direction(e);
  for (const auto& c : enumerate_cycles(e.host())) CHECK_NOTHROW(p.diagram(c).validate());
  CHECK_FALSE(Projection::make(e, v3(0, 0, 0)));
  for (int i = 0; i < kDirectionBudget; ++i) CHECK_FALSE(is_zero(candidate_direction(i)));
}

TEST_CASE("diagrams") {
  Graph k3 = complete_graph(3);
  auto flat = SpatialEmbedding(k3, {v3(0, 0, 0), v3(3, 0, 0), v3(0, 3, 0)});
  auto tri = enumerate_cycles(k3).front();
  CHECK(choose_generic_direction(flat).diagram(tri).crossing_count() == 0);

  auto hopf = hopf_triangles();
  REQUIRE(validate_embedding(hopf).empty());
  auto pairs = enumerate_disjoint_pairs(hopf.host());
  REQUIRE(pairs.size() == 1);
  for (int skip = 0; skip < 3; ++skip) {
    auto p = choose_generic_direction(hopf, skip);
    auto d = p.diagram(pairs[0]);
    CHECK(d.component_count() == 2);
    CHECK(linking_number(d) * linking_number(d) == 1);
    auto inter = 0;
    for (const auto& c : simplify(d).crossings()) inter += c.over_component != c.under_component;
    CHECK(inter == 2);
  }

  Graph c8 = Graph::from_indices({"1", "2", "3", "4", "5", "6", "7", "8"},
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}});
  auto cyc = Cycle::from_vertices(c8, {0, 1, 2, 3, 4, 5, 6, 7});
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto e = random_rectilinear_embedding(c8, s, 10);
    CHECK(choose_generic_direction(e).diagram(cyc).crossing_count() <= 20);
  }
}

TEST_CASE("invariants do not depend on the projection direction") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto e = random_rectilinear_embedding(complete_graph(6), sample_seed(77, s), 1000);
    auto p1 = choose_generic_direction(e), p2 = choose_generic_direction(e, 1);
    // an off-axis direction as well
    std::optional<Projection> p3;
    for (int i = 3; !p3; ++i) p3 = Projection::make(e, candidate_direction(i));
    for (const auto& pr : enumerate_disjoint_pairs(e.host())) {
      int lk = linking_number(p1.diagram(pr));
      CHECK(linking_number(p2.diagram(pr)) == lk);
      CHECK(linking_number(p3->diagram(pr)) == lk);
    }
    for (const auto& c : enumerate_cycles(e.host(), 6)) {
      auto v = a2(p1.diagram(c));
      CHECK(a2(p2.diagram(c)) == v);
      CHECK(a2(p3->diagram(c)) == v);
    }
  }
}
