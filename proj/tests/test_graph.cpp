#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cgv/canonical.hpp"
#include "cgv/cycles.hpp"
#include "cgv/exchange.hpp"
#include "cgv/family.hpp"
#include "cgv/named.hpp"

using namespace cgv;

namespace {

// Brute-force oracle: every cyclic vertex ordering of every subset, keyed by
// its edge set. Independent of the path-extension enumerator.
std::set<std::set<std::pair<int, int>>> brute_force_cycles(const Graph& g, int length) {
  std::set<std::set<std::pair<int, int>>> out;
  const int n = g.vertex_count();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != length) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask & (1U << v)) vs.push_back(v);
    do {
      bool ok = true;
      std::set<std::pair<int, int>> es;
      for (std::size_t i = 0; i < vs.size() && ok; ++i) {
        int a = vs[i], b = vs[(i + 1) % vs.size()];
        ok = g.adjacent(a, b);
        es.insert(std::minmax(a, b));
      }
      if (ok) out.insert(es);
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return out;
}

std::set<std::pair<int, int>> edge_pairs(const Graph& g, const Cycle& c) {
  std::set<std::pair<int, int>> es;
  const auto& v = c.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) es.insert(std::minmax(v[i], v[(i + 1) % v.size()]));
  (void)g;
  return es;
}

Graph relabeled(const Graph& g, unsigned seed) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) labels[static_cast<std::size_t>(perm[i])] = "w" + g.label(static_cast<int>(i));
  std::vector<std::pair<int, int>> es;
  for (const auto& e : g.edges()) es.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return Graph::from_indices(labels, es);
}

std::map<int, int> degree_histogram(const Graph& g) {
  std::map<int, int> h;
  for (int v = 0; v < g.vertex_count(); ++v) ++h[g.degree(v)];
  return h;
}

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(complete_graph(7).edge_count() == 21);
  auto k1 = complete_graph(1);
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK_THROWS_AS(complete_graph(0), InputError);
}

TEST_CASE("complete multipartite graphs") {
  auto k33 = complete_multipartite({3, 3});
  CHECK(k33.vertex_count() == 6);
  CHECK(k33.edge_count() == 9);
  auto k331 = complete_multipartite({3, 3, 1});
  CHECK(k331.vertex_count() == 7);
  CHECK(k331.edge_count() == 15);
  auto k3311 = complete_multipartite({3, 3, 1, 1});
  CHECK(k3311.vertex_count() == 8);
  CHECK(k3311.edge_count() == 22);
  CHECK(k3311.tag(k3311.index_of("x")) == VertexTag::x);
  CHECK(k3311.tag(k3311.index_of("y")) == VertexTag::y);
  CHECK(k3311.tag(k3311.index_of("1")) == VertexTag::black);
  CHECK(k3311.tag(k3311.index_of("4")) == VertexTag::white);
  CHECK_FALSE(k3311.adjacent(k3311.index_of("1"), k3311.index_of("3")));
  CHECK(k3311.adjacent(k3311.index_of("x"), k3311.index_of("y")));
  CHECK_THROWS_AS(complete_multipartite({}), InputError);
}

TEST_CASE("graph validation rejects non-simple input") {
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "a"}}), InputError);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "c"}}), InputError);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}}, {VertexTag::x}), InputError);
}

TEST_CASE("graph JSON round trip") {
  const auto& g = standard_k3311();
  auto j = to_json(g);
  CHECK(graph_from_json(j) == g);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":["a"],"edges":[["a","b"]]})")), InputError);
}

TEST_CASE("cycle enumeration: Hamiltonian counts") {
  CHECK(enumerate_cycles(complete_graph(6), 6).size() == 60);   // 5!/2
  CHECK(enumerate_cycles(complete_graph(7), 7).size() == 360);  // 6!/2
  CHECK(enumerate_cycles(complete_multipartite({3, 3}), 3).empty());
}

TEST_CASE("cycle enumeration agrees with brute force on small graphs") {
  std::vector<Graph> graphs = {complete_graph(5), complete_graph(6), complete_multipartite({3, 3}),
                               complete_multipartite({3, 3, 1}), standard_k3311(), named_graph("q7"),
                               named_graph("q8"), named_graph("p8")};
  std::mt19937 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        if (rng() % 2) es.emplace_back(a, b);
    graphs.push_back(Graph::from_indices({"a", "b", "c", "d", "e", "f", "g", "h"}, es));
  }
  for (const auto& g : graphs) {
    if (g.vertex_count() > 8) continue;
    for (int k = 3; k <= g.vertex_count(); ++k) {
      auto oracle = brute_force_cycles(g, k);
      auto mine = enumerate_cycles(g, k);
      std::set<std::set<std::pair<int, int>>> got;
      for (const auto& c : mine) got.insert(edge_pairs(g, c));
      CHECK(got.size() == mine.size());
      CHECK(got == oracle);
    }
  }
}

TEST_CASE("cycle canonical form") {
  auto k6 = complete_graph(6);
  auto a = Cycle::from_labels(k6, {"3", "1", "5", "2"});
  auto b = Cycle::from_labels(k6, {"2", "5", "1", "3"});
  CHECK(a == b);
  CHECK(a.vertices() == std::vector<int>{0, 2, 1, 4});
  CHECK_THROWS_AS(Cycle::from_labels(complete_multipartite({3, 3}), {"1", "2", "3"}), InputError);
  CHECK_THROWS_AS(Cycle::from_labels(k6, {"1", "2"}), InputError);
}

TEST_CASE("disjoint cycle pairs") {
  CHECK(enumerate_disjoint_pairs(complete_graph(6), std::pair{3, 3}).size() == 10);
  CHECK(enumerate_disjoint_pairs(complete_multipartite({3, 3}), std::pair{3, 3}).empty());
  // brute force: all pairs of oracle cycles with disjoint vertex sets
  const auto& k = standard_k3311();
  auto fours = brute_force_cycles(k, 4);
  std::vector<std::set<int>> vsets;
  for (const auto& es : fours) {
    std::set<int> vs;
    for (auto [a, b] : es) vs.insert({a, b});
    vsets.push_back(vs);
  }
  std::size_t n44 = 0;
  for (std::size_t i = 0; i < vsets.size(); ++i)
    for (std::size_t j = i + 1; j < vsets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                            std::back_inserter(common));
      if (common.empty()) ++n44;
    }
  CHECK(n44 == 45);
  CHECK(enumerate_disjoint_pairs(k, std::pair{4, 4}).size() == n44);
  CHECK(enumerate_disjoint_pairs(k, std::pair{5, 3}).size() == 72);
  CHECK(enumerate_disjoint_pairs(k, std::pair{3, 5}).size() == 72);
}

TEST_CASE("K3311 cycle structure") {
  const auto& k = standard_k3311();
  const int x = k.index_of("x"), y = k.index_of("y");
  for (const auto& c : enumerate_cycles(k, 8)) {
    CHECK(c.contains_vertex(x));
    CHECK(c.contains_vertex(y));
  }
  const VertexMask all = 0xff;
  for (auto shape : {std::pair{3, 5}, std::pair{4, 4}})
    for (const auto& p : enumerate_disjoint_pairs(k, shape))
      CHECK((p.first.vertex_mask() | p.second.vertex_mask()) == all);

  // Γ_k(Gx) ∪ Γ_k(Gy) = {γ ∈ Γ_k(K3311) : {x,y} ⊄ γ} for k = 5, 7
  auto gx = named_subgraph("Gx");
  auto gy = named_subgraph("Gy");
  for (int len : {5, 7}) {
    std::set<std::vector<std::string>> lhs, rhs;
    for (const auto& c : enumerate_cycles(gx, len)) lhs.insert(Cycle::from_labels(k, c.labels(gx)).labels(k));
    for (const auto& c : enumerate_cycles(gy, len)) lhs.insert(Cycle::from_labels(k, c.labels(gy)).labels(k));
    for (const auto& c : enumerate_cycles(k, len))
      if (!(c.contains_vertex(x) && c.contains_vertex(y))) rhs.insert(c.labels(k));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("delta-Y and Y-delta exchanges") {
  auto k4 = complete_graph(4);
  auto t = triangles(k4).front();
  auto g = delta_y(k4, t);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 6);
  CHECK(g.degree(4) == 3);
  int deg3 = 0;
  for (int v = 0; v < 5; ++v) deg3 += g.degree(v) == 3 ? 1 : 0;
  CHECK(deg3 == 2);  // new vertex plus the untouched corner

  auto k6 = complete_graph(6);
  auto q7 = delta_y(k6, triangles(k6).front());
  CHECK(isomorphic(q7, named_graph("q7")));
  auto back = y_delta(q7, q7.vertex_count() - 1);
  CHECK(isomorphic(back, k6));
  CHECK_THROWS_AS(y_delta(k6, 0), InputError);

  auto k33 = complete_multipartite({3, 3});
  auto bogus = Cycle::from_labels(k6, {"1", "2", "3"});
  CHECK_THROWS_AS(delta_y(k33, bogus), InputError);  // 1-3 is not an edge of K3,3

  int collapsed = -1;
  auto k4y = y_delta(complete_graph(4), 0, &collapsed);  // neighbors already form a triangle
  CHECK(collapsed == 3);
  CHECK(k4y.edge_count() == 3);
}

TEST_CASE("delta-Y invariants on many graphs") {
  for (const char* name : {"k6", "k7", "k3311", "q7", "p7", "p8"}) {
    auto g = named_graph(name);
    for (const auto& t : triangles(g)) {
      auto h = delta_y(g, t);
      CHECK(h.vertex_count() == g.vertex_count() + 1);
      CHECK(h.edge_count() == g.edge_count());
      CHECK(isomorphic(y_delta(h, h.vertex_count() - 1), g));
    }
  }
}

TEST_CASE("canonical labels") {
  auto p7 = complete_multipartite({3, 3, 1});
  auto k6 = complete_graph(6);
  auto k6_tris = triangles(k6);
  // P7 from K6: ΔY then YΔ at a vertex of the original triangle region
  auto family = generate_family(k6, FamilyMoves::both);
  REQUIRE(family.find(p7).has_value());
  CHECK(canonical_label(k6) != canonical_label(complete_multipartite({3, 3})));
  for (const char* name : {"k6", "k7", "k3311", "q8", "p10", "p9"}) {
    auto g = named_graph(name);
    for (unsigned s = 1; s <= 3; ++s) CHECK(canonical_label(relabeled(g, s)) == canonical_label(g));
    auto iso = find_isomorphism(g, relabeled(g, 9));
    REQUIRE(iso.size() == static_cast<std::size_t>(g.vertex_count()));
    auto h = relabeled(g, 9);
    for (const auto& e : g.edges()) CHECK(h.adjacent(iso[static_cast<std::size_t>(e.u)], iso[static_cast<std::size_t>(e.v)]));
  }
  CHECK_FALSE(isomorphic(named_graph("q8"), named_graph("p8")));
}

TEST_CASE("Petersen family") {
  auto f = generate_family(complete_graph(6), FamilyMoves::both);
  REQUIRE(f.members.size() == 7);
  CHECK(f.delta_family_size() == 6);
  auto p7 = f.find(named_graph("p7"));
  REQUIRE(p7);
  CHECK_FALSE(f.members[static_cast<std::size_t>(*p7)].in_delta_family);
  // degree fingerprints of K6, Q7, P7, Q8, P8, P9, P10
  std::set<std::map<int, int>> expected = {
      {{5, 6}}, {{5, 3}, {4, 3}, {3, 1}}, {{6, 1}, {4, 6}}, {{4, 6}, {3, 2}},
      {{5, 1}, {4, 4}, {3, 3}}, {{4, 3}, {3, 6}}, {{3, 10}}};
  std::set<std::map<int, int>> got;
  for (const auto& m : f.members) got.insert(degree_histogram(m.graph));
  CHECK(got == expected);
  for (const char* name : {"k6", "q7", "p7", "q8", "p8", "p9", "p10"}) CHECK(f.find(named_graph(name)));
  auto q7 = f.find(named_graph("q7"));
  CHECK(std::find(f.delta_y_moves.begin(), f.delta_y_moves.end(), FamilyMove{0, *q7}) != f.delta_y_moves.end());
  CHECK(f.collapsed_y_delta == 0);
}

TEST_CASE("K7 and K3311 families") {
  auto k7 = generate_family(complete_graph(7), FamilyMoves::both);
  CHECK(k7.members.size() == 20);
  CHECK(k7.members.size() - static_cast<std::size_t>(k7.delta_family_size()) == 6);
  auto d = generate_family(standard_k3311(), FamilyMoves::delta_only);
  CHECK(d.members.size() == 26);
  auto all = generate_family(standard_k3311(), FamilyMoves::both);
  CHECK(all.members.size() == 58);
  CHECK(all.delta_family_size() == 26);
  for (const auto& m : all.members) CHECK(m.graph.edge_count() == 22);
}

TEST_CASE("delta-Y paths") {
  auto p10 = named_graph("p10");
  auto path = find_delta_y_path(complete_graph(6), p10);
  REQUIRE(path);
  CHECK(path->graphs.size() == 5);
  CHECK(path->triangles.size() == 4);
  CHECK(path->target_to_last.size() == 10);
  CHECK_FALSE(find_delta_y_path(complete_graph(6), named_graph("p7")));
}

TEST_CASE("named subgraphs of K3311") {
  auto gx = named_subgraph("Gx");
  CHECK(gx.vertex_count() == 7);
  CHECK(gx.edge_count() == 15);
  CHECK_FALSE(gx.find("y"));
  CHECK(isomorphic(gx, complete_multipartite({3, 3, 1})));
  CHECK(isomorphic(named_subgraph("Gy"), complete_multipartite({3, 3, 1})));

  auto q81 = named_subgraph("Q8(1)");
  for (const char* e : {"1", "3", "5"}) CHECK(q81.adjacent(q81.index_of("x"), q81.index_of(e)));
  for (const char* e : {"2", "4", "6"}) CHECK(q81.adjacent(q81.index_of("y"), q81.index_of(e)));
  CHECK(q81.edge_count() == 15);
  CHECK(isomorphic(q81, named_graph("q8")));
  CHECK(isomorphic(named_subgraph("Q8(2)"), named_graph("q8")));

  auto h1 = named_subgraph("H1");
  CHECK(h1.edge_count() == 16);
  CHECK(h1.adjacent(h1.index_of("x"), h1.index_of("y")));

  auto p7 = complete_multipartite({3, 3, 1});
  for (const auto& n : all_f_ij_names()) {
    auto f = named_subgraph(n);
    CHECK(f.edge_count() == 16);
    CHECK(isomorphic(suppress_degree_two(f), p7));
  }
  auto fx13 = named_subgraph("Fx(1,2)");
  CHECK_FALSE(fx13.adjacent(fx13.index_of("1"), fx13.index_of("2")));
  CHECK(fx13.adjacent(fx13.index_of("1"), fx13.index_of("y")));
  CHECK(fx13.degree(fx13.index_of("y")) == 2);
  for (const auto& n : all_f_k_names()) CHECK(isomorphic(suppress_degree_two(named_subgraph(n)), p7));

  auto names = all_p8_names();
  CHECK(names.size() == 36);
  std::set<std::string> distinct;
  for (const auto& n : names) {
    auto g = named_subgraph(n);
    CHECK(g.vertex_count() == 8);
    CHECK(isomorphic(g, named_graph("p8")));
    CHECK(g.degree(g.index_of(std::string(1, n.v))) == 3);
    CHECK_FALSE(g.adjacent(g.index_of("x"), g.index_of("y")));
    CHECK(enumerate_disjoint_pairs(g, std::pair{3, 5}).size() == 4);
    CHECK(enumerate_disjoint_pairs(g, std::pair{4, 4}).size() == 4);
    distinct.insert(canonical_label(g).code + to_json(g).dump());
  }
  CHECK(distinct.size() == 36);

  CHECK_THROWS_AS(named_subgraph("Fx(2,1)"), InputError);
  CHECK_THROWS_AS(named_subgraph("P8(1;x;3,5)"), InputError);
  CHECK_THROWS_AS(named_subgraph("Q8(3)"), InputError);
  CHECK_THROWS_AS(named_subgraph("Gz"), InputError);
  CHECK(SubgraphName::parse("P8(2;y;5,1)").to_string() == "P8(2;y;1,5)");
}

TEST_CASE("suppressing degree-two vertices") {
  auto sub = Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}});
  CHECK_THROWS_AS(suppress_degree_two(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}})), InputError);
  auto f = named_subgraph("Fx(3,4)");
  auto s = suppress_degree_two(f);
  CHECK(s.vertex_count() == 7);
  CHECK(s.edge_count() == 15);
  (void)sub;
}
