#include "cgv/engine.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

#include "cgv/canonical.hpp"
#include "cgv/cycle_types.hpp"
#include "cgv/exchange.hpp"
#include "cgv/invariants.hpp"
#include "cgv/named.hpp"

namespace cgv {

namespace {

Projection pick_projection(const SpatialEmbedding& e, int skip, int* rejected) {
  *rejected = 0;
  for (int i = 0; i < kDirectionBudget; ++i) {
    if (auto p = Projection::make(e, candidate_direction(i))) {
      if (skip-- == 0) return std::move(*p);
    } else {
      ++*rejected;
    }
  }
  throw std::runtime_error("no regular projection among " + std::to_string(kDirectionBudget) + " directions");
}

}  // namespace

InvariantCache::InvariantCache(SpatialEmbedding e, int skip)
    : embedding_(std::move(e)), projection_(pick_projection(embedding_, skip, &rejected_)) {}

std::int64_t InvariantCache::a2(const Cycle& c) {
  auto it = a2_.find(c.vertices());
  if (it != a2_.end()) return it->second;
  const auto v = cgv::a2(projection_.diagram(c));
  a2_.emplace(c.vertices(), v);
  return v;
}

int InvariantCache::lk(const DisjointCyclePair& p) {
  auto key = std::make_pair(p.first.vertices(), p.second.vertices());
  auto it = lk_.find(key);
  if (it != lk_.end()) return it->second;
  const int v = linking_number(projection_.diagram(p));
  lk_.emplace(std::move(key), v);
  return v;
}

const std::vector<Cycle>& InvariantCache::cycles() {
  if (!have_cycles_) {
    cycles_ = enumerate_cycles(graph());
    have_cycles_ = true;
  }
  return cycles_;
}

const std::vector<DisjointCyclePair>& InvariantCache::pairs() {
  if (!have_pairs_) {
    pairs_ = disjoint_pairs_of(cycles());
    have_pairs_ = true;
  }
  return pairs_;
}

bool IdentityReport::consistent() const {
  auto side = [&](const std::vector<Term>& terms, std::int64_t c) {
    std::int64_t s = c;
    for (const auto& t : terms) s += t.coefficient * t.sum;
    return mod2 ? ((s % 2) + 2) % 2 : s;
  };
  return side(lhs_terms, lhs_constant) == lhs && side(rhs_terms, rhs_constant) == rhs && holds == (lhs == rhs);
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

const std::vector<std::pair<std::string, std::string>> kIdentities = {
    {"CG-K6", "k6"}, {"CG-K7", "k7"}, {"K3311-MAIN", "k3311"}, {"P7", "p7"},
    {"Q8", "q8"},    {"L1", "k3311"}, {"L2", "k3311"},         {"L3", "k3311"}};
const std::vector<std::pair<std::string, std::string>> kBounds = {
    {"LINK22", "k3311"}, {"COR1", "k3311"}, {"FOISY", "k3311"}, {"RECTI8", "k3311"}, {"RECTIP7", "p7"}};

// Accumulates one class of cycles or pairs.
struct Acc {
  std::int64_t sum = 0, count = 0;
  void add(std::int64_t v) {
    sum += v;
    ++count;
  }
  Term term(std::string name, std::int64_t coefficient) const { return {std::move(name), coefficient, sum, count}; }
};

void finish(IdentityReport& r, const InvariantCache& inv) {
  auto side = [](const std::vector<Term>& terms, std::int64_t c) {
    for (const auto& t : terms) c += t.coefficient * t.sum;
    return c;
  };
  r.lhs = side(r.lhs_terms, r.lhs_constant);
  r.rhs = side(r.rhs_terms, r.rhs_constant);
  if (r.mod2) {
    r.lhs = ((r.lhs % 2) + 2) % 2;
    r.rhs = ((r.rhs % 2) + 2) % 2;
  }
  r.holds = r.lhs == r.rhs;
  r.direction = inv.projection().direction();
  r.rejected_directions = inv.rejected_directions();
}

void require_standard(const InvariantCache& inv) {
  if (!(inv.graph() == standard_k3311()))
    throw InputError("this check needs the standard labeled K3311 (vertices 1..6, x, y)");
}

void require_homeomorphic(const Graph& g, const char* name) {
  Graph s;
  try {
    s = suppress_degree_two(g);
  } catch (const InputError&) {
    throw InputError(std::string("graph is not homeomorphic to ") + name);
  }
  if (!isomorphic(s, named_graph(name))) throw InputError(std::string("graph is not homeomorphic to ") + name);
}

int sq(int v) { return v * v; }

// Sums shared by the K3311 identities.
struct K3311Sums {
  Acc a8, a8_type[3], a7_not_both, a6_prime, a6_k33, a6_one, a6_xy_type[4], a5_not_both;
  Acc lk35, lk44, lk44_type[3];
  int odd_a2_4_to_8 = 0;
};

K3311Sums k3311_sums(InvariantCache& inv, bool knots = true, bool links = true) {
  require_standard(inv);
  const Graph& k = inv.graph();
  const int x = k.index_of("x"), y = k.index_of("y");
  std::set<std::vector<int>> prime;
  for (const auto& c : gamma6_prime()) prime.insert(c.vertices());
  K3311Sums s;
  for (const auto& c : knots ? inv.cycles() : std::vector<Cycle>{}) {
    const int len = c.length();
    if (len < 4) continue;
    const auto v = inv.a2(c);
    if (v % 2 != 0) ++s.odd_a2_4_to_8;
    const bool hx = c.contains_vertex(x), hy = c.contains_vertex(y);
    const bool both = hx && hy;
    if (len == 8) {
      s.a8.add(v);
      s.a8_type[static_cast<int>(classify_cycle(c))].add(v);
    } else if (len == 7 && !both) {
      s.a7_not_both.add(v);
    } else if (len == 6) {
      if (prime.count(c.vertices())) s.a6_prime.add(v);
      if (!hx && !hy) s.a6_k33.add(v);
      if (hx != hy) s.a6_one.add(v);
      if (both) s.a6_xy_type[static_cast<int>(classify_cycle(c))].add(v);
    } else if (len == 5 && !both) {
      s.a5_not_both.add(v);
    }
  }
  for (const auto& p : links ? inv.pairs() : std::vector<DisjointCyclePair>{}) {
    const int a = p.first.length(), b = p.second.length();
    if (a + b != 8 || a < 3) continue;
    const int l2 = sq(inv.lk(p));
    if (a == 4 && b == 4) {
      s.lk44.add(l2);
      s.lk44_type[static_cast<int>(classify_pair44(p))].add(l2);
    } else if (std::min(a, b) == 3) {
      s.lk35.add(l2);
    }
  }
  return s;
}

IdentityReport identity_k3311(const std::string& id, InvariantCache& inv) {
  const auto s = k3311_sums(inv);
  IdentityReport r;
  r.id = id;
  const int A = 0, B = 1, C = 2;
  if (id == "K3311-MAIN") {
    r.lhs_terms = {s.a8.term("a2 over 8-cycles", 4), s.a7_not_both.term("a2 over 7-cycles missing x or y", -4),
                   s.a6_prime.term("a2 over the 6-cycle class G6'", -4),
                   s.a5_not_both.term("a2 over 5-cycles missing x or y", -4)};
    r.rhs_terms = {s.lk35.term("lk^2 over (3,5)-pairs", 1), s.lk44.term("lk^2 over (4,4)-pairs", 2)};
    r.rhs_constant = -18;
  } else if (id == "L1") {
    r.lhs_terms = {s.lk35.term("lk^2 over (3,5)-pairs", 1), s.lk44_type[A].term("lk^2 over (4,4)-pairs of type A", 2)};
    r.rhs_terms = {s.a8_type[A].term("a2 over 8-cycles of type A", 4),
                   s.a7_not_both.term("a2 over 7-cycles of Gx and Gy", -4),
                   s.a6_k33.term("a2 over 6-cycles of K33", 8),
                   s.a6_xy_type[A].term("a2 over 6-cycles through x,y of type A", -4),
                   s.a5_not_both.term("a2 over 5-cycles of Gx and Gy", -4)};
    r.rhs_constant = 10;
  } else if (id == "L2") {
    r.lhs_terms = {s.lk44_type[B].term("lk^2 over (4,4)-pairs of type B", 1)};
    r.rhs_terms = {s.a8_type[B].term("a2 over 8-cycles of type B", 2), s.a6_k33.term("a2 over 6-cycles of K33", 4),
                   s.a6_one.term("a2 over 6-cycles through exactly one of x,y", -2),
                   s.a6_xy_type[B].term("a2 over 6-cycles through x,y of type B", -2)};
    r.rhs_constant = 2;
  } else {
    r.lhs_terms = {s.lk44_type[C].term("lk^2 over (4,4)-pairs of type C", 1)};
    r.rhs_terms = {s.a8_type[C].term("a2 over 8-cycles of type C", 2), s.a6_k33.term("a2 over 6-cycles of K33", -8),
                   s.a6_xy_type[C].term("a2 over 6-cycles through x,y of type C", -2)};
    r.rhs_constant = 2;
  }
  finish(r, inv);
  return r;
}

IdentityReport identity_p7(InvariantCache& inv) {
  const Graph& g = inv.graph();
  require_homeomorphic(g, "p7");
  int u = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 6) u = v;
  Acc a7, a6, a5, lk34;
  for (const auto& c : inv.cycles()) {
    const int b = branch_length(g, c);
    if (b == 7) a7.add(inv.a2(c));
    else if (b == 6 && !c.contains_vertex(u)) a6.add(inv.a2(c));
    else if (b == 5) a5.add(inv.a2(c));
  }
  for (const auto& p : inv.pairs()) {
    const int a = branch_length(g, p.first), b = branch_length(g, p.second);
    if (std::min(a, b) == 3 && std::max(a, b) == 4) lk34.add(sq(inv.lk(p)));
  }
  IdentityReport r;
  r.id = "P7";
  r.lhs_terms = {a7.term("a2 over 7-cycles", 2), a6.term("a2 over 6-cycles avoiding the degree-6 vertex", -4),
                 a5.term("a2 over 5-cycles", -2)};
  r.rhs_terms = {lk34.term("lk^2 over (3,4)-pairs", 1)};
  r.rhs_constant = -1;
  finish(r, inv);
  return r;
}

IdentityReport identity_q8(InvariantCache& inv) {
  const Graph& g = inv.graph();
  require_homeomorphic(g, "q8");
  VertexMask cubic = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 3) cubic |= VertexMask{1} << v;
  Acc a8, a6_avoid, a6_meet, lk44;
  for (const auto& c : inv.cycles()) {
    const int b = branch_length(g, c);
    if (b == 8) a8.add(inv.a2(c));
    else if (b == 6) ((c.vertex_mask() & cubic) ? a6_meet : a6_avoid).add(inv.a2(c));
  }
  for (const auto& p : inv.pairs())
    if (branch_length(g, p.first) == 4 && branch_length(g, p.second) == 4) lk44.add(sq(inv.lk(p)));
  IdentityReport r;
  r.id = "Q8";
  r.lhs_terms = {a8.term("a2 over 8-cycles", 2), a6_avoid.term("a2 over 6-cycles avoiding both degree-3 vertices", 2),
                 a6_meet.term("a2 over 6-cycles meeting a degree-3 vertex", -2)};
  r.rhs_terms = {lk44.term("lk^2 over (4,4)-pairs", 1)};
  r.rhs_constant = -1;
  finish(r, inv);
  return r;
}

void require_complete(const Graph& g, int n) {
  if (g.vertex_count() != n || g.edge_count() != n * (n - 1) / 2)
    throw InputError("this identity needs an embedding of K" + std::to_string(n));
}

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> out;
  for (const auto& [id, g] : kIdentities) out.push_back(id);
  return out;
}

std::vector<std::string> bound_ids() {
  std::vector<std::string> out;
  for (const auto& [id, g] : kBounds) out.push_back(id);
  return out;
}

std::string canonical_identity_id(std::string_view id) {
  std::string u = upper(id);
  if (u == "MAIN" || u == "K3311") u = "K3311-MAIN";
  if (u == "CGK6") u = "CG-K6";
  if (u == "CGK7") u = "CG-K7";
  for (const auto& [known, g] : kIdentities)
    if (known == u) return u;
  throw InputError("unknown identity '" + std::string(id) + "'");
}

std::string canonical_bound_id(std::string_view id) {
  const std::string u = upper(id);
  for (const auto& [known, g] : kBounds)
    if (known == u) return u;
  throw InputError("unknown bound '" + std::string(id) + "'");
}

std::string identity_graph(std::string_view id) {
  const auto c = canonical_identity_id(id);
  for (const auto& [known, g] : kIdentities)
    if (known == c) return g;
  return {};
}

std::string bound_graph(std::string_view id) {
  const auto c = canonical_bound_id(id);
  for (const auto& [known, g] : kBounds)
    if (known == c) return g;
  return {};
}

SpatialEmbedding to_standard_k3311(const SpatialEmbedding& e) {
  const Graph& k = standard_k3311();
  if (e.host() == k) return e;
  auto map = find_isomorphism(k, e.host());
  if (map.empty()) throw InputError("embedded graph is not K3311");
  return transport_embedding(e, k, map);
}

IdentityReport evaluate_identity(std::string_view id, InvariantCache& inv) {
  const std::string c = canonical_identity_id(id);
  if (c == "CG-K6" || c == "CG-K7") {
    const int n = c == "CG-K6" ? 6 : 7;
    require_complete(inv.graph(), n);
    Acc acc;
    if (n == 6) {
      for (const auto& p : inv.pairs()) acc.add(inv.lk(p));
    } else {
      for (const auto& cyc : inv.cycles())
        if (cyc.length() == 7) acc.add(inv.a2(cyc));
    }
    IdentityReport r;
    r.id = c;
    r.mod2 = true;
    r.lhs_terms = {acc.term(n == 6 ? "lk over (3,3)-pairs" : "a2 over 7-cycles", 1)};
    r.rhs_constant = 1;
    finish(r, inv);
    return r;
  }
  if (c == "P7") return identity_p7(inv);
  if (c == "Q8") return identity_q8(inv);
  return identity_k3311(c, inv);
}

IdentityReport evaluate_identity(std::string_view id, const SpatialEmbedding& e) {
  const bool k3311 = identity_graph(id) == "k3311";
  InvariantCache inv(k3311 ? to_standard_k3311(e) : e);
  return evaluate_identity(id, inv);
}

BoundReport evaluate_bound(std::string_view id, InvariantCache& inv) {
  const std::string c = canonical_bound_id(id);
  BoundReport r;
  r.id = c;
  if (c == "RECTIP7") {
    require_homeomorphic(inv.graph(), "p7");
    if (!inv.embedding().rectilinear()) throw InputError("RECTIP7 needs a rectilinear embedding");
    Acc a7;
    for (const auto& cyc : inv.cycles())
      if (branch_length(inv.graph(), cyc) == 7) a7.add(inv.a2(cyc));
    r.terms = {a7.term("a2 over 7-cycles", 1)};
    r.bound = 0;
  } else {
    if (c == "RECTI8" && !inv.embedding().rectilinear()) throw InputError("RECTI8 needs a rectilinear embedding");
    const auto s = k3311_sums(inv, c != "LINK22", c == "LINK22");
    if (c == "LINK22") {
      r.terms = {s.lk35.term("lk^2 over (3,5)-pairs", 1), s.lk44.term("lk^2 over (4,4)-pairs", 2)};
      r.bound = 22;
    } else if (c == "COR1") {
      r.terms = {s.a8.term("a2 over 8-cycles", 1), s.a7_not_both.term("a2 over 7-cycles missing x or y", -1),
                 s.a6_prime.term("a2 over the 6-cycle class G6'", -1),
                 s.a5_not_both.term("a2 over 5-cycles missing x or y", -1)};
      r.bound = 1;
    } else if (c == "FOISY") {
      r.terms = {{"cycles of length 4..8 with odd a2", 1, s.odd_a2_4_to_8, s.odd_a2_4_to_8}};
      r.bound = 1;
    } else {
      r.terms = {s.a8.term("a2 over 8-cycles", 1)};
      r.bound = 1;
    }
  }
  for (const auto& t : r.terms) r.value += t.coefficient * t.sum;
  r.satisfied = r.value >= r.bound;
  r.direction = inv.projection().direction();
  r.rejected_directions = inv.rejected_directions();
  return r;
}

BoundReport evaluate_bound(std::string_view id, const SpatialEmbedding& e) {
  const bool k3311 = bound_graph(id) == "k3311";
  InvariantCache inv(k3311 ? to_standard_k3311(e) : e);
  return evaluate_bound(id, inv);
}

int pair_parity(InvariantCache& inv, const Graph& subgraph) {
  const Graph& host = inv.graph();
  auto lift = [&](const Cycle& c) { return Cycle::from_labels(host, c.labels(subgraph)); };
  int sum = 0;
  for (const auto& p : enumerate_disjoint_pairs(subgraph)) sum += inv.lk(DisjointCyclePair(lift(p.first), lift(p.second)));
  return ((sum % 2) + 2) % 2;
}

StickCheck check_stick_bounds(InvariantCache& inv) {
  StickCheck out;
  for (const auto& c : inv.cycles()) {
    const int sticks = inv.embedding().stick_count(c);
    if (sticks > 6) continue;
    const auto v = inv.a2(c);
    std::string name;
    for (const auto& l : c.labels(inv.graph())) name += (name.empty() ? "" : "-") + l;
    if (sticks <= 5) {
      ++out.cycles_at_most_5;
      if (v != 0) out.violations.push_back(name + " has " + std::to_string(sticks) + " sticks and a2=" + std::to_string(v));
    } else {
      ++out.cycles_with_6;
      if (v != 0 && v != 1) out.violations.push_back(name + " has 6 sticks and a2=" + std::to_string(v));
    }
  }
  return out;
}

std::map<std::string, ShapeTally> link_census(InvariantCache& inv) {
  std::map<std::string, ShapeTally> out;
  auto name = [&](const Cycle& c) {
    std::string s;
    for (const auto& l : c.labels(inv.graph())) s += (s.empty() ? "" : "-") + l;
    return s;
  };
  for (const auto& p : inv.pairs()) {
    const int a = std::min(p.first.length(), p.second.length()), b = std::max(p.first.length(), p.second.length());
    auto& t = out[std::to_string(a) + "," + std::to_string(b)];
    const int l = inv.lk(p);
    ++t.pairs;
    t.lk_squared += sq(l);
    t.max_abs_lk = std::max(t.max_abs_lk, std::abs(l));
    if (l != 0) {
      ++t.nonzero;
      t.nontrivial.push_back(name(p.first) + " / " + name(p.second) + ": lk=" + std::to_string(l));
    }
  }
  return out;
}

nlohmann::json direction_json(const Direction& d) {
  return nlohmann::json::array({format_rational(d.x), format_rational(d.y), format_rational(d.z)});
}

nlohmann::json to_json(const Term& t) {
  return {{"name", t.name}, {"coefficient", t.coefficient}, {"sum", t.sum}, {"count", t.count}};
}

nlohmann::json to_json(const IdentityReport& r) {
  auto terms = [](const std::vector<Term>& ts) {
    auto a = nlohmann::json::array();
    for (const auto& t : ts) a.push_back(to_json(t));
    return a;
  };
  return {{"id", r.id},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"holds", r.holds},
          {"mod2", r.mod2},
          {"lhs_terms", terms(r.lhs_terms)},
          {"rhs_terms", terms(r.rhs_terms)},
          {"lhs_constant", r.lhs_constant},
          {"rhs_constant", r.rhs_constant},
          {"direction", direction_json(r.direction)},
          {"rejected_directions", r.rejected_directions}};
}

nlohmann::json to_json(const BoundReport& r) {
  auto terms = nlohmann::json::array();
  for (const auto& t : r.terms) terms.push_back(to_json(t));
  return {{"id", r.id},
          {"value", r.value},
          {"bound", r.bound},
          {"satisfied", r.satisfied},
          {"terms", terms},
          {"direction", direction_json(r.direction)},
          {"rejected_directions", r.rejected_directions}};
}

nlohmann::json to_json(const std::map<std::string, ShapeTally>& census) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [shape, t] : census)
    out[shape] = {{"pairs", t.pairs},
                  {"nonzero_lk", t.nonzero},
                  {"lk_squared_sum", t.lk_squared},
                  {"max_abs_lk", t.max_abs_lk},
                  {"nontrivial", t.nontrivial}};
  return out;
}

}  // namespace cgv
