#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgv/cycles.hpp"
#include "cgv/diagram.hpp"
#include "cgv/embedding.hpp"

namespace cgv {

/// Projection kernel: a nonzero rational vector. The observer sits at
/// +infinity along it, so larger p.d means closer to the observer (over).
using Direction = Vec3;

/// A transverse double point of the projected graph, with the sign taken
/// relative to each edge's native orientation (edge.u -> edge.v).
struct GraphCrossing {
  int over_segment = 0, under_segment = 0;
  Rational over_param, under_param;  // in (0,1) along each segment
  int sign = 0;
};

/// Regular projection of a whole embedded graph along a direction, with the
/// crossing table from which diagrams of any cycle or cycle pair are cut.
class Projection {
 public:
  /// The projection when it is regular; otherwise std::nullopt and a reason.
  static std::optional<Projection> make(const SpatialEmbedding& e, const Direction& d, std::string* why = nullptr);

  const Direction& direction() const { return direction_; }
  const std::vector<GraphCrossing>& crossings() const { return crossings_; }

  /// Components oriented by each cycle's canonical vertex order.
  LinkDiagram diagram(const Cycle& c) const;
  LinkDiagram diagram(const DisjointCyclePair& p) const;
  LinkDiagram diagram(const std::vector<Cycle>& components) const;

 private:
  struct Event {
    Rational position;  // segment index + parameter
    int crossing;
    bool over;
  };
  Projection() = default;

  Graph host_;
  Direction direction_;
  std::vector<int> segment_edge_;
  std::vector<GraphCrossing> crossings_;
  std::vector<std::vector<Event>> edge_events_;  // sorted along each edge
};

/// The i-th direction of the fixed search order: the three axes, then small
/// integer vectors by increasing max-norm (first nonzero entry positive).
Direction candidate_direction(int index);

inline constexpr int kDirectionBudget = 400;

/// First candidate giving a regular projection of the whole graph. `skip`
/// regular candidates are passed over first (for independent re-checks).
/// Throws std::runtime_error when the budget runs out.
Projection choose_generic_direction(const SpatialEmbedding& e, int skip = 0);

}  // namespace cgv
