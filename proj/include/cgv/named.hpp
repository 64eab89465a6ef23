#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgv/graph.hpp"

namespace cgv {

/// K_{3,3,1,1} with black vertices 1,3,5, white vertices 2,4,6 and the two
/// degree-7 vertices x, y.
const Graph& standard_k3311();

/// Named subgraphs of the standard K_{3,3,1,1}. Written as
///   Gx, Gy, K33, Fx(i,j), Fy(i,j), Q8(1), Q8(2), Fx(k), Fy(k), H1, H2, P8(k;v;i,j)
/// with i black and j white for Fx/Fy(i,j); k in 1..6 for Fx/Fy(k).
/// P8(k;v;i,j): v in {x,y} has degree 3 and is joined to exactly k, i, j,
/// where i,j lie in the color class opposite to k; the edges ki, kj are
/// removed from K33 and the other singleton w is joined to every vertex of
/// 1..6 except the remaining member l of {i,j}'s class.
struct SubgraphName {
  enum class Kind { Gx, Gy, K33, Fx_ij, Fy_ij, Q8_1, Q8_2, Fx_k, Fy_k, H1, H2, P8 };
  Kind kind = Kind::Gx;
  int i = 0;
  int j = 0;
  int k = 0;
  char v = 'x';

  static SubgraphName parse(std::string_view text);
  std::string to_string() const;
};

Graph named_subgraph(const SubgraphName& name);
Graph named_subgraph(std::string_view name);

/// Every valid P8(k;v;i,j): 36 subgraphs.
std::vector<SubgraphName> all_p8_names();
/// Fx(i,j) and Fy(i,j) for all black i, white j: 18 subgraphs.
std::vector<SubgraphName> all_f_ij_names();
/// Fx(k) and Fy(k) for k = 1..6: 12 subgraphs.
std::vector<SubgraphName> all_f_k_names();

/// Reference graphs of the K6 family built by ΔY moves from K6:
/// "k6", "q7", "p7", "q8", "p8", "p9", "p10"; also "k7", "k33", "k3311".
Graph named_graph(std::string_view name);

}  // namespace cgv
