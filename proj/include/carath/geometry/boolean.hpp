#pragma once

#include <vector>

#include "carath/geometry/domain.hpp"

namespace carath::geometry {

/// Transversal crossing of two curves.
struct Crossing {
  double t_first = 0.0;
  double t_second = 0.0;
  Complex point;
  double angle = 0.0;  ///< acute angle between the tangents, radians
};

/// Crossings of two closed curves, found on the polylines and refined by
/// Newton iteration on first(t) - second(s) = 0. Throws GeometryError for
/// contact at an angle below 1e-3 rad.
std::vector<Crossing> find_crossings(const ParamCurve& first, const ParamCurve& second);

/// Connected components of a ∩ b with area above 1e-10 (empty when disjoint).
std::vector<Domain> boolean_intersect(const Domain& a, const Domain& b);

/// a ∪ b; throws GeometryError when the union is disconnected.
Domain boolean_union(const Domain& a, const Domain& b);

}  // namespace carath::geometry
