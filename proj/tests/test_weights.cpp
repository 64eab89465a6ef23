#include <doctest.h>

#include <set>

#include "cgv/exchange.hpp"
#include "cgv/family.hpp"
#include "cgv/named.hpp"
#include "cgv/sampling.hpp"
#include "cgv/weights.hpp"

using namespace cgv;

namespace {

// Preimages of a cycle of G_Y computed backwards: a cycle avoiding the new
// vertex c is its own preimage; one through p-c-q comes from the triangle
// edge pq, or from the path p-r-q when the third corner r is unused.
std::vector<Cycle> preimages(const Graph& g_delta, const Cycle& triangle, const Cycle& c) {
  const int center = g_delta.vertex_count();
  const auto& vs = c.vertices();
  if (!c.contains_vertex(center)) return {Cycle::from_vertices(g_delta, vs)};
  const std::size_t n = vs.size();
  std::size_t at = 0;
  while (vs[at] != center) ++at;
  const int p = vs[(at + n - 1) % n], q = vs[(at + 1) % n];
  int r = -1;
  for (int t : triangle.vertices())
    if (t != p && t != q) r = t;
  std::vector<Cycle> out;
  std::vector<int> direct;
  for (std::size_t i = 0; i < n; ++i)
    if (i != at) direct.push_back(vs[i]);
  if (direct.size() >= 3) out.push_back(Cycle::from_vertices(g_delta, direct));
  if (!c.contains_vertex(r)) {
    std::vector<int> around = vs;
    around[at] = r;
    out.push_back(Cycle::from_vertices(g_delta, around));
  }
  return out;
}

}  // namespace

TEST_CASE("seed weights") {
  auto w = seed_weights(WeightSeed::k3311);
  int plus = 0, minus = 0;
  for (auto v : w.weights) {
    plus += v == 1;
    minus += v == -1;
  }
  CHECK(plus == 324);
  CHECK(minus == 72 + 288 + 72);
  auto k7 = seed_weights(WeightSeed::k7);
  std::int64_t total = 0;
  for (auto v : k7.weights) total += v;
  CHECK(total == 360);
}

TEST_CASE("pushforward agrees with backwards preimages") {
  const auto& k = standard_k3311();
  auto w = seed_weights(WeightSeed::k3311);
  for (const auto& tri : triangles(k)) {
    auto pushed = pushforward_weight(w, tri);
    Graph g_y = delta_y(k, tri);
    CHECK(pushed.host == g_y);
    int two = 0;
    for (std::size_t i = 0; i < pushed.cycles.size(); ++i) {
      auto pre = preimages(k, tri, pushed.cycles[i]);
      CHECK_FALSE(pre.empty());  // surjective
      std::int64_t expect = 0;
      for (const auto& c : pre) expect += w.weight(c);
      CHECK(pushed.weights[i] == expect);
      CHECK(pushed.weights[i] >= -2);
      CHECK(pushed.weights[i] <= 2);
      two += pre.size() == 2;
    }
    CHECK(two > 0);
  }
  // weight on the triangle alone disappears
  auto tri = triangles(k).front();
  auto only = zero_weights(k);
  only.weight_ref(tri) = 5;
  for (auto v : pushforward_weight(only, tri).weights) CHECK(v == 0);
  CHECK_THROWS_AS(pushforward_weight(w, Cycle::from_labels(k, {"1", "2", "3", "4"})), InputError);
}

TEST_CASE("K7 seed after one move") {
  auto w = seed_weights(WeightSeed::k7);
  auto pushed = pushforward_weight(w, triangles(w.host).front());
  std::set<std::int64_t> values(pushed.weights.begin(), pushed.weights.end());
  // two preimages differ in length by one, so they are never both Hamiltonian
  CHECK(values == std::set<std::int64_t>{0, 1});
}

TEST_CASE("derived weight maps") {
  auto same = derive_weight_map(standard_k3311(), WeightSeed::k3311);
  CHECK(same.weights == seed_weights(WeightSeed::k3311).weights);
  CHECK_THROWS_AS(derive_weight_map(complete_graph(6), WeightSeed::k3311), InputError);
  auto fam = generate_family(standard_k3311(), FamilyMoves::delta_only);
  for (std::uint64_t m = 1; m < 4; ++m) {
    const Graph& g = fam.members[m].graph;
    auto w = derive_weight_map(g, WeightSeed::k3311);
    CHECK(w.host == g);
    auto e = random_rectilinear_embedding(g, sample_seed(8, m), 1000000);
    InvariantCache inv(e);
    CHECK(weighted_a2_sum(inv, w) >= 1);
  }
}

TEST_CASE("weighted sum on K3311 equals the COR1 value") {
  auto e = random_rectilinear_embedding(standard_k3311(), 77, 1000000);
  InvariantCache inv(e);
  CHECK(weighted_a2_sum(inv, seed_weights(WeightSeed::k3311)) == evaluate_bound("COR1", inv).value);
  CHECK(weighted_a2_sum(inv, zero_weights(standard_k3311())) == 0);
  InvariantCache k7(random_rectilinear_embedding(complete_graph(7), 5, 1000));
  CHECK(weighted_a2_sum(k7, seed_weights(WeightSeed::k7)) % 2 != 0);
  CHECK_THROWS_AS(weighted_a2_sum(k7, zero_weights(standard_k3311())), InputError);
}

TEST_CASE("contracting a flat Y preserves the weighted sum") {
  const auto& k = standard_k3311();
  auto w = seed_weights(WeightSeed::k3311);
  auto tris = triangles(k);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto& tri = tris[static_cast<std::size_t>(s * 5 % tris.size())];
    auto pushed = pushforward_weight(w, tri);
    auto f = flat_y_embedding(pushed.host, pushed.host.vertex_count() - 1, sample_seed(21, s), 1000);
    CHECK(validate_embedding(f).empty());
    auto phi = contract_flat_y(f, k, tri);
    CHECK(validate_embedding(phi).empty());
    InvariantCache a(f), b(phi);
    CHECK(weighted_a2_sum(a, pushed) == weighted_a2_sum(b, w));
  }
}
