#pragma once

#include <memory>
#include <vector>

#include "carath/geometry/domain.hpp"

namespace carath::geometry {

/// Quadrature nodes on the positively oriented boundary of a domain.
struct BoundaryMesh {
  std::vector<Complex> nodes;
  std::vector<double> weights;     ///< arclength weights
  std::vector<Complex> tangents;   ///< unit, positive orientation of the domain
  std::vector<std::size_t> curve;  ///< index into owner->boundary()
  std::shared_ptr<const Domain> owner;
  double max_spacing = 0.0;        ///< largest distance between neighbouring nodes

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
};

/// Trapezoidal nodes in the curve parameter for smooth curves. Curves with
/// several segments get per-segment midpoint nodes under the substitution
/// u = s^p / (s^p + (1-s)^p), p = grading_exponent, which clusters nodes at
/// every segment junction.
BoundaryMesh mesh_boundary(std::shared_ptr<const Domain> domain, int n_per_curve, double grading_exponent = 3.0);
BoundaryMesh mesh_boundary(const Domain& domain, int n_per_curve, double grading_exponent = 3.0);

}  // namespace carath::geometry
