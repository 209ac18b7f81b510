#include "carath/curvature/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "carath/geometry/grid.hpp"

namespace carath::curvature {

double log_metric_laplacian(const MetricEvaluator& eval, Complex z, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("stencil spacing must be positive");
  if (const auto& d = eval.domain()) {
    if (!d->contains(z) || d->dist_to_boundary(z) < 10.0 * h) {
      throw GeometryError("finite-difference stencil leaves the domain");
    }
  }
  const double centre = std::log(eval(z));
  const double sum = std::log(eval(z + h)) + std::log(eval(z - h)) + std::log(eval(z + Complex(0.0, h))) +
                     std::log(eval(z - Complex(0.0, h)));
  return (sum - 4.0 * centre) / (h * h);
}

double default_h(const Domain& domain, Complex z) { return std::min(0.01, domain.dist_to_boundary(z) / 20.0); }

CurvatureEstimate curvature_at(const MetricEvaluator& eval, Complex z, double h) {
  if (!(h > 0.0)) {
    if (!eval.domain()) throw std::invalid_argument("default stencil spacing needs a domain");
    h = default_h(*eval.domain(), z);
  }
  CurvatureEstimate est;
  est.point = z;
  est.h = h;
  est.metric_value = eval(z);
  const double c2 = est.metric_value * est.metric_value;
  est.kappa = -log_metric_laplacian(eval, z, h) / c2;
  const double half = -log_metric_laplacian(eval, z, 0.5 * h) / c2;
  est.kappa_refined = (4.0 * half - est.kappa) / 3.0;
  return est;
}

CurvatureScan scan_curvature(const Domain& domain, const MetricEvaluator& eval, double delta, double spacing,
                             double h) {
  if (!(h > 0.0) || delta < 10.0 * h) throw std::invalid_argument("scan requires delta >= 10 h > 0");
  CurvatureScan scan;
  scan.label = domain.label();
  scan.grid = geometry::grid_sample(domain, delta, spacing);
  scan.estimates.reserve(scan.grid.size());
  scan.kappa_min = 1e300;
  scan.kappa_max = -1e300;
  for (const Complex z : scan.grid) {
    scan.estimates.push_back(curvature_at(eval, z, h));
    scan.kappa_min = std::min(scan.kappa_min, scan.estimates.back().kappa_refined);
    scan.kappa_max = std::max(scan.kappa_max, scan.estimates.back().kappa_refined);
  }
  return scan;
}

}  // namespace carath::curvature
