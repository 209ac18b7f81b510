#pragma once

#include <vector>

#include "carath/kernels/evaluator.hpp"

namespace carath::curvature {

using geometry::Domain;
using kernels::MetricEvaluator;

/// Five-point Laplacian of log c at z with spacing h. When the evaluator has
/// a domain, requires dist_to_boundary(z) >= 10 h (GeometryError otherwise).
double log_metric_laplacian(const MetricEvaluator& eval, Complex z, double h);

struct CurvatureEstimate {
  Complex point;
  double h = 0.0;
  double kappa = 0.0;          ///< at spacing h
  double kappa_refined = 0.0;  ///< Richardson combination of h and h/2
  double metric_value = 0.0;

  double error_bar() const { return std::abs(kappa - kappa_refined); }
};

/// min(0.01, dist_to_boundary(z) / 20).
double default_h(const Domain& domain, Complex z);

/// kappa = -laplacian / c^2. h <= 0 selects default_h (needs a domain).
CurvatureEstimate curvature_at(const MetricEvaluator& eval, Complex z, double h = 0.0);

struct CurvatureScan {
  std::string label;
  std::vector<Complex> grid;
  std::vector<CurvatureEstimate> estimates;
  double kappa_min = 0.0;  ///< over kappa_refined
  double kappa_max = 0.0;

  double c_hat() const { return -kappa_min; }
};

/// Curvature at every grid_sample(domain, delta, spacing) point with a fixed h.
/// Requires delta >= 10 h.
CurvatureScan scan_curvature(const Domain& domain, const MetricEvaluator& eval, double delta, double spacing,
                             double h);

}  // namespace carath::curvature
