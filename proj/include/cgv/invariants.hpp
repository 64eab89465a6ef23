#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgv/diagram.hpp"

namespace cgv {

/// Polynomial in z with integer coefficients; coefficients[k] is the z^k term.
struct ConwayPolynomial {
  std::vector<std::int64_t> coefficients;

  std::int64_t coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coefficients.size()) ? coefficients[static_cast<std::size_t>(k)] : 0;
  }
  std::string to_string() const;
  friend bool operator==(const ConwayPolynomial& a, const ConwayPolynomial& b);
};

/// Half the signed count of crossings between the two components.
int linking_number(const LinkDiagram& d);

inline constexpr std::int64_t kSkeinBudget = 20'000'000;

/// Conway polynomial by the skein relation over descending diagrams. With
/// max_degree >= 0 only the terms up to z^max_degree are computed (much
/// cheaper). Throws std::runtime_error past kSkeinBudget resolution nodes.
ConwayPolynomial conway_polynomial(const LinkDiagram& d, int max_degree = -1);

/// z^2 coefficient of a knot's Conway polynomial, via the skein relation.
std::int64_t a2(const LinkDiagram& d);

/// The same number from a Gauss-diagram formula: the signed count of crossing
/// pairs (a, b) met from the base point in the order under a, over b, over a,
/// under b.
std::int64_t a2_gauss(const LinkDiagram& d);

/// Removes Reidemeister I kinks and Reidemeister II bigons visible in the
/// Gauss code until none remain; crossings are renumbered compactly.
LinkDiagram simplify(const LinkDiagram& d);

}  // namespace cgv
