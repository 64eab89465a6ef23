#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cgv/cycles.hpp"
#include "cgv/embedding.hpp"
#include "cgv/projection.hpp"

namespace cgv {

/// Lazily computed a2 and lk values of one embedding, all read off a single
/// regular projection of the whole graph.
class InvariantCache {
 public:
  /// `skip` regular directions are passed over (for cross-checks).
  explicit InvariantCache(SpatialEmbedding e, int skip = 0);

  const SpatialEmbedding& embedding() const { return embedding_; }
  const Graph& graph() const { return embedding_.host(); }
  const Projection& projection() const { return projection_; }
  /// Candidate directions tried and rejected before the one in use.
  int rejected_directions() const { return rejected_; }

  std::int64_t a2(const Cycle& c);
  int lk(const DisjointCyclePair& p);

  const std::vector<Cycle>& cycles();
  const std::vector<DisjointCyclePair>& pairs();

 private:
  SpatialEmbedding embedding_;
  Projection projection_;
  int rejected_ = 0;
  std::map<std::vector<int>, std::int64_t> a2_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> lk_;
  std::vector<Cycle> cycles_;
  std::vector<DisjointCyclePair> pairs_;
  bool have_cycles_ = false, have_pairs_ = false;
};

/// One summed class of an identity: contributes coefficient * sum.
struct Term {
  std::string name;
  std::int64_t coefficient = 1;
  std::int64_t sum = 0;
  std::int64_t count = 0;  // members of the class
};

struct IdentityReport {
  std::string id;
  std::vector<Term> lhs_terms, rhs_terms;
  std::int64_t lhs_constant = 0, rhs_constant = 0;
  std::int64_t lhs = 0, rhs = 0;
  bool mod2 = false;  // lhs, rhs are residues mod 2
  bool holds = false;
  Direction direction;
  int rejected_directions = 0;

  /// Recomputes lhs/rhs from the terms; true when they match the stored values.
  bool consistent() const;
};

struct BoundReport {
  std::string id;
  std::vector<Term> terms;
  std::int64_t value = 0;
  std::int64_t bound = 0;
  bool satisfied = false;
  Direction direction;
  int rejected_directions = 0;
};

/// CG-K6, CG-K7, K3311-MAIN, P7, Q8, L1, L2, L3 (case-insensitive; "main"
/// is accepted for K3311-MAIN).
std::vector<std::string> identity_ids();
std::string canonical_identity_id(std::string_view id);
/// LINK22, COR1, FOISY, RECTI8, RECTIP7.
std::vector<std::string> bound_ids();
std::string canonical_bound_id(std::string_view id);
/// Name of the graph an identity or bound is stated for: k6, k7, k3311, p7, q8.
std::string identity_graph(std::string_view id);
std::string bound_graph(std::string_view id);

/// K3311 identities and bounds need the standard labeling; an isomorphic
/// host is relabeled first.
SpatialEmbedding to_standard_k3311(const SpatialEmbedding& e);

IdentityReport evaluate_identity(std::string_view id, InvariantCache& inv);
IdentityReport evaluate_identity(std::string_view id, const SpatialEmbedding& e);
BoundReport evaluate_bound(std::string_view id, InvariantCache& inv);
BoundReport evaluate_bound(std::string_view id, const SpatialEmbedding& e);

/// Sum of lk over the disjoint cycle pairs of a subgraph (given by labels of
/// the embedded graph), reduced mod 2. Petersen-family subgraphs give 1.
int pair_parity(InvariantCache& inv, const Graph& subgraph);

struct StickCheck {
  int cycles_at_most_5 = 0;
  int cycles_with_6 = 0;
  std::vector<std::string> violations;
};
/// a2 = 0 for cycles of at most five sticks and a2 in {0,1} for six sticks.
StickCheck check_stick_bounds(InvariantCache& inv);

struct ShapeTally {
  int pairs = 0;
  int nonzero = 0;
  std::int64_t lk_squared = 0;
  int max_abs_lk = 0;
  std::vector<std::string> nontrivial;  // "1-2-3 / 4-5-6: lk=1"
};
/// Disjoint-pair statistics keyed by shape "3,5" etc.
std::map<std::string, ShapeTally> link_census(InvariantCache& inv);

nlohmann::json to_json(const Term& t);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const std::map<std::string, ShapeTally>& census);
nlohmann::json direction_json(const Direction& d);

}  // namespace cgv
