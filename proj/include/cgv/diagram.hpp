#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cgv {

/// One pass of a component through a crossing.
struct Passage {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const Passage&, const Passage&) = default;
};

/// Crossing data derived from the Gauss code.
struct CrossingInfo {
  int sign = 0;
  int over_component = 0, over_position = 0;
  int under_component = 0, under_position = 0;
};

/// Oriented link diagram as a signed Gauss code. Each component is the
/// cyclic sequence of passages met along its orientation; every crossing
/// appears exactly once over and once under. An empty component is a
/// crossingless circle.
///
/// Sign convention: viewing the projection plane from the observer side, a
/// crossing is +1 when (over tangent) x (under tangent) points at the
/// observer.
struct LinkDiagram {
  std::vector<std::vector<Passage>> components;
  std::vector<int> signs;  // indexed by crossing id

  int component_count() const { return static_cast<int>(components.size()); }
  int crossing_count() const { return static_cast<int>(signs.size()); }
  std::vector<CrossingInfo> crossings() const;

  /// Throws InputError unless every crossing id 0..n-1 occurs once over and
  /// once under and has sign +-1.
  void validate() const;

  /// Text form: passages like "O1+" or "U3-" separated by spaces, components
  /// separated by "|"; crossing ids in text are arbitrary positive integers.
  static LinkDiagram parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

}  // namespace cgv
