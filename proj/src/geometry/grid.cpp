#include "carath/geometry/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace carath::geometry {

std::vector<Complex> grid_sample(const Domain& domain, double delta, double spacing) {
  if (!(delta > 0.0) || !(spacing > 0.0)) throw std::invalid_argument("delta and spacing must be positive");
  const Box box = domain.bounding_box();
  const long ix0 = static_cast<long>(std::ceil(box.xmin / spacing));
  const long ix1 = static_cast<long>(std::floor(box.xmax / spacing));
  const long iy0 = static_cast<long>(std::ceil(box.ymin / spacing));
  const long iy1 = static_cast<long>(std::floor(box.ymax / spacing));
  std::vector<Complex> out;
  for (long iy = iy0; iy <= iy1; ++iy) {
    for (long ix = ix0; ix <= ix1; ++ix) {
      const Complex z(ix * spacing, iy * spacing);
      try {
        if (domain.contains(z) && domain.closest_boundary_point(z).distance >= delta) out.push_back(z);
      } catch (const GeometryError&) {
        // lattice point on the boundary
      }
    }
  }
  if (out.empty()) throw GeometryError("no grid point at the requested boundary distance");
  return out;
}

}  // namespace carath::geometry
