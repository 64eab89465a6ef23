#include <doctest.h>

#include <random>

#include "braid.hpp"
#include "cgv/embedding.hpp"
#include "cgv/invariants.hpp"
#include "cgv/projection.hpp"

using namespace cgv;

namespace {

ConwayPolynomial poly(std::vector<std::int64_t> c) { return {std::move(c)}; }

// Conway polynomials of the (2,n) torus links by their own recursion:
// sigma_1^n resolves at its last crossing into sigma_1^(n-2) and sigma_1^(n-1).
std::vector<ConwayPolynomial> torus_2n(int max_n) {
  std::vector<ConwayPolynomial> t{poly({}), poly({1})};
  for (int n = 2; n <= max_n; ++n) {
    auto p = t[static_cast<std::size_t>(n - 2)].coefficients;
    const auto& q = t[static_cast<std::size_t>(n - 1)].coefficients;
    p.resize(std::max(p.size(), q.size() + 1), 0);
    for (std::size_t k = 0; k < q.size(); ++k) p[k + 1] += q[k];
    t.push_back(poly(p));
  }
  return t;
}

}  // namespace

TEST_CASE("Gauss code text round trip") {
  auto d = LinkDiagram::parse("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(d.crossing_count() == 3);
  CHECK(d.to_string() == "O1+ U2+ O3+ U1+ O2+ U3+");
  auto hopf = LinkDiagram::parse("O1+ U2+ | U1+ O2+");
  CHECK(hopf.component_count() == 2);
  CHECK(LinkDiagram::parse(hopf.to_string()) == hopf);
  CHECK(LinkDiagram::parse("").crossing_count() == 0);
  CHECK_THROWS_AS(LinkDiagram::parse("O1+ O1+"), InputError);
  CHECK_THROWS_AS(LinkDiagram::parse("O1+ U1-"), InputError);
  CHECK_THROWS_AS(LinkDiagram::parse("X1+"), InputError);
}

TEST_CASE("Conway polynomial of standard knots") {
  CHECK(conway_polynomial(LinkDiagram::parse("")) == poly({1}));
  CHECK(conway_polynomial(LinkDiagram::parse("|")) == poly({}));  // two-component unlink
  auto trefoil = LinkDiagram::parse("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(conway_polynomial(trefoil) == poly({1, 0, 1}));
  CHECK(conway_polynomial(braid_closure(2, {1, 1, 1})) == poly({1, 0, 1}));
  CHECK(conway_polynomial(braid_closure(2, {-1, -1, -1})) == poly({1, 0, 1}));
  auto fig8 = braid_closure(3, {1, -2, 1, -2});
  CHECK(fig8.component_count() == 1);
  CHECK(conway_polynomial(fig8) == poly({1, 0, -1}));
  CHECK(a2(fig8) == -1);
  auto granny = braid_closure(3, {1, 1, 1, 2, 2, 2});
  CHECK(conway_polynomial(granny) == poly({1, 0, 2, 0, 1}));
  CHECK(a2(granny) == 2);
  auto square = braid_closure(3, {1, 1, 1, -2, -2, -2});
  CHECK(a2(square) == 2);
  CHECK(a2(braid_closure(3, {1, 2})) == 0);
  CHECK(a2(braid_closure(3, {1, 1, 2, 2, 1, 2})) != 0);
  CHECK(conway_polynomial(trefoil).to_string() == "1 + z^2");
}

TEST_CASE("Conway polynomial of torus links matches recursion") {
  auto expected = torus_2n(9);
  for (int n = 1; n <= 9; ++n) {
    auto d = braid_closure(2, std::vector<int>(static_cast<std::size_t>(n), 1));
    CHECK(conway_polynomial(d) == expected[static_cast<std::size_t>(n)]);
    if (n % 2 == 0) {
      CHECK(linking_number(d) == n / 2);
      CHECK(conway_polynomial(d).coefficient(1) == linking_number(d));
    }
  }
}

TEST_CASE("linking number") {
  CHECK(linking_number(LinkDiagram::parse("|")) == 0);
  CHECK(linking_number(braid_closure(2, {1, 1})) == 1);
  CHECK(linking_number(braid_closure(2, {-1, -1})) == -1);
  CHECK_THROWS_AS(linking_number(LinkDiagram::parse("O1+ U1+")), InputError);
}

TEST_CASE("Gauss-diagram a2 agrees with the skein") {
  CHECK(a2_gauss(LinkDiagram::parse("")) == 0);
  CHECK(a2_gauss(LinkDiagram::parse("O1+ U2+ O3+ U1+ O2+ U3+")) == 1);
  CHECK(a2_gauss(braid_closure(3, {1, -2, 1, -2})) == -1);
  std::mt19937 rng(5);
  int knots = 0;
  for (int trial = 0; trial < 400 && knots < 150; ++trial) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    std::vector<int> word;
    const int len = 3 + static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) {
      int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
      word.push_back(rng() % 2 ? k : -k);
    }
    auto d = braid_closure(strands, word);
    if (d.component_count() != 1) continue;
    ++knots;
    // every rotation of the base point gives the same value
    for (std::size_t r = 0; r < d.components[0].size(); r += 3) {
      auto rotated = d;
      std::rotate(rotated.components[0].begin(), rotated.components[0].begin() + static_cast<long>(r),
                  rotated.components[0].end());
      CHECK(a2_gauss(rotated) == a2(d));
    }
  }
  CHECK(knots >= 100);
}

TEST_CASE("simplify") {
  auto kink = LinkDiagram::parse("O1+ U1+ O2+ U3+ O4+ U2+ O3+ U4+");
  auto s = simplify(kink);
  CHECK(s.crossing_count() == 3);
  CHECK(conway_polynomial(s) == conway_polynomial(kink));
  auto bigon = LinkDiagram::parse("O1+ O2- | U2- U1+");
  CHECK(simplify(bigon).crossing_count() == 0);
  auto trefoil = LinkDiagram::parse("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(simplify(trefoil) == trefoil);
  auto same_sign = LinkDiagram::parse("O1+ O2+ | U1+ U2+");
  CHECK(simplify(same_sign).crossing_count() == 2);
}

TEST_CASE("random 8-stick knots: a2 routes agree and stick bounds hold") {
  Graph c8 = Graph::from_indices({"1", "2", "3", "4", "5", "6", "7", "8"},
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}});
  auto cycle = Cycle::from_vertices(c8, {0, 1, 2, 3, 4, 5, 6, 7});
  int nontrivial = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto e = random_rectilinear_embedding(c8, 1000 + i, 20);
    auto p = choose_generic_direction(e);
    auto d = p.diagram(cycle);
    CHECK(d.crossing_count() <= 20);
    auto v = a2(d);
    CHECK(a2_gauss(d) == v);
    CHECK(a2(choose_generic_direction(e, 1).diagram(cycle)) == v);
    nontrivial += v != 0;
  }
  MESSAGE("nontrivial 8-stick knots: " << nontrivial);
}
