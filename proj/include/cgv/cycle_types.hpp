#pragma once

#include <string_view>
#include <vector>

#include "cgv/cycles.hpp"

namespace cgv {

enum class CycleType { A, B, C, D };
std::string_view to_string(CycleType t);

/// Type of an 8-cycle, or of a 6-cycle through x and y, of the standard
/// K3311 (see standard_k3311). C: uses the edge xy. Otherwise A: x's two
/// cycle-neighbors have different colors; B: x's neighbors share one color
/// and y's share the other; D: all four neighbors have one color.
CycleType classify_cycle(const Cycle& c);

/// Type of a (4,4)-pair of the standard K3311. C: the edge xy is used; A: x
/// and y lie in one component; B: they lie in different components.
CycleType classify_pair44(const DisjointCyclePair& p);

/// 6-cycles through exactly one of x, y, together with the 6-cycles through
/// both that are of type A, B or C. Sorted; computed once.
const std::vector<Cycle>& gamma6_prime();

}  // namespace cgv
