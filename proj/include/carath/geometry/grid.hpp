#pragma once

#include <vector>

#include "carath/geometry/domain.hpp"

namespace carath::geometry {

/// Points of the lattice spacing * (Z + iZ) inside the domain at boundary
/// distance >= delta, in row-major order (y, then x). Throws GeometryError
/// when no point qualifies.
std::vector<Complex> grid_sample(const Domain& domain, double delta, double spacing);

}  // namespace carath::geometry
