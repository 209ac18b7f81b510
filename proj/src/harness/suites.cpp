#include "carath/harness/suites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "carath/geometry/boolean.hpp"
#include "carath/geometry/grid.hpp"
#include "carath/geometry/offset.hpp"
#include "carath/kernels/closed_form.hpp"

namespace carath::harness {

namespace {

std::shared_ptr<const Domain> shared(Domain d) { return std::make_shared<const Domain>(std::move(d)); }

double stencil_h(double h, double delta) { return h > 0.0 ? h : std::min(0.01, delta / 10.0); }

// Outer boundary point at t and the inward unit normal there.
std::pair<Complex, Complex> inward_normal(const Domain& domain, double t) {
  const auto s = domain.outer().eval(t);
  return {s.point, Complex(0.0, 1.0) * s.tangent};
}

bool nested_discs(const DiscShape& a, const DiscShape& b) {
  const double d = std::abs(a.center - b.center);
  return d + std::min(a.radius, b.radius) <= std::max(a.radius, b.radius);
}

}  // namespace

SuitaReport verify_suita(std::shared_ptr<const Domain> domain, const SuitaParams& params) {
  const auto eval = make_evaluator(domain, params.method, params.options);
  SuitaReport r;
  r.tol = params.tol;
  r.scan = curvature::scan_curvature(*domain, eval, params.delta, params.spacing, stencil_h(params.h, params.delta));
  const double limit = -4.0 + params.tol;
  for (const auto& e : r.scan.estimates) {
    if (e.kappa_refined > limit) ++r.violations;
  }
  const auto [p, n] = inward_normal(*domain, params.trend_t);
  for (const double d : params.trend_distances) {
    const auto e = curvature::curvature_at(eval, p + d * n);
    if (e.kappa_refined > limit) ++r.violations;
    r.trend.push_back({d, e});
  }
  r.trend_decreasing = true;
  for (std::size_t k = 1; k < r.trend.size(); ++k) {
    if (!(std::abs(r.trend[k].estimate.kappa_refined + 4.0) < std::abs(r.trend[k - 1].estimate.kappa_refined + 4.0))) {
      r.trend_decreasing = false;
    }
  }
  r.pass = r.violations == 0;
  return r;
}

SolyninReport verify_solynin_two_discs(const DiscShape& first, const DiscShape& second, double delta,
                                       double spacing) {
  const Domain d1 = Domain::disc(first.center, first.radius, "D1");
  const Domain d2 = Domain::disc(second.center, second.radius, "D2");
  auto parts = geometry::boolean_intersect(d1, d2);
  if (parts.empty()) throw GeometryError("discs do not intersect");
  const auto inter = shared(std::move(parts.front()));
  const auto uni = shared(geometry::boolean_union(d1, d2));
  const auto lam_int = kernels::poincare_evaluator(inter);
  const auto lam_uni = kernels::poincare_evaluator(uni);

  SolyninReport r;
  r.first = first;
  r.second = second;
  r.nested = nested_discs(first, second);
  auto point_at = [&](Complex z) {
    SolyninPoint pt;
    pt.z = z;
    pt.lambda_int = lam_int(z);
    pt.lambda_uni = lam_uni(z);
    pt.lambda_1 = kernels::disc_metric(first.center, first.radius, z);
    pt.lambda_2 = kernels::disc_metric(second.center, second.radius, z);
    pt.ratio = (pt.lambda_int * pt.lambda_uni) / (pt.lambda_1 * pt.lambda_2);
    return pt;
  };
  for (const Complex z : geometry::grid_sample(*inter, delta, spacing)) r.points.push_back(point_at(z));
  r.max_ratio = -1e300;
  r.min_ratio = 1e300;
  for (const auto& pt : r.points) {
    r.max_ratio = std::max(r.max_ratio, pt.ratio);
    r.min_ratio = std::min(r.min_ratio, pt.ratio);
  }
  if (r.nested) {
    r.center = first.radius <= second.radius ? first.center : second.center;
  } else {
    const auto sector = kernels::two_disc_sector(first, second, geometry::RegionKind::intersection);
    r.center = 0.5 * (sector.p + sector.q);
  }
  r.center_ratio = point_at(r.center).ratio;
  r.strict = r.max_ratio < 1.0;
  r.pass = r.nested ? (r.max_ratio - 1.0 <= 1e-10 && 1.0 - r.min_ratio <= 1e-10) : r.max_ratio <= 1.0 + 1e-8;
  return r;
}

PairReport verify_submult(std::shared_ptr<const Domain> d1, std::shared_ptr<const Domain> d2,
                          const SubmultParams& params) {
  auto parts = geometry::boolean_intersect(*d1, *d2);
  if (parts.empty()) throw GeometryError("domains do not intersect");
  const auto uni = shared(geometry::boolean_union(*d1, *d2));

  PairReport r;
  r.label1 = d1->label();
  r.label2 = d2->label();
  r.components = static_cast<int>(parts.size());
  r.tol_rel = params.tol_rel;
  const double h = stencil_h(params.h, params.delta);

  const auto e1 = make_evaluator(d1, params.method, params.options);
  const auto e2 = make_evaluator(d2, params.method, params.options);
  const auto eu = make_evaluator(uni, params.method, params.options);
  r.kind_1 = kernels::to_string(e1.kind());
  r.kind_2 = kernels::to_string(e2.kind());
  r.kind_uni = kernels::to_string(eu.kind());

  r.max_ratio = 0.0;
  r.c_hat = 0.0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto comp = shared(std::move(parts[k]));
    const auto ei = make_evaluator(comp, params.method, params.options);
    if (k == 0) r.kind_int = kernels::to_string(ei.kind());
    for (const Complex z : geometry::grid_sample(*comp, params.delta, params.spacing)) {
      PairPoint pt;
      pt.component = static_cast<int>(k);
      pt.z = z;
      try {
        pt.c_int = ei(z);
        pt.c_uni = eu(z);
        pt.c_d1 = e1(z);
        pt.c_d2 = e2(z);
        pt.kappa1 = curvature::curvature_at(e1, z, h).kappa_refined;
        pt.kappa2 = curvature::curvature_at(e2, z, h).kappa_refined;
      } catch (const Error&) {
        ++r.dropped;
        continue;
      }
      pt.ratio = (pt.c_int * pt.c_uni) / (pt.c_d1 * pt.c_d2);
      r.max_ratio = std::max(r.max_ratio, pt.ratio);
      r.c_hat = std::max(r.c_hat, -(pt.kappa1 + pt.kappa2));
      r.points.push_back(pt);
    }
  }
  if (r.points.empty()) throw NumericalError("no grid point could be evaluated");
  r.bound = std::sqrt(r.c_hat / 4.0);
  r.pass = r.max_ratio <= r.bound * (1.0 + r.tol_rel);
  return r;
}

ConvergenceReport converge_thickening(const Domain& domain, Complex point, const std::vector<double>& eps,
                                      Method method, const MethodOptions& options) {
  if (eps.empty()) throw std::invalid_argument("eps list is empty");
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (!(eps[k] > 0.0) || (k > 0 && !(eps[k] < eps[k - 1]))) {
      throw std::invalid_argument("eps list must be positive and strictly decreasing");
    }
  }
  const auto base = shared(domain);
  if (!base->contains(point)) throw GeometryError("point is outside the domain");
  ConvergenceReport r;
  r.label = domain.label();
  r.point = point;
  r.eps = eps;
  for (const double e : eps) {
    const auto thick = shared(geometry::thicken(domain, e));
    r.values.push_back(make_evaluator(thick, method, options)(point));
  }
  r.limit_value = make_evaluator(base, method, options)(point);
  r.monotone = true;
  for (std::size_t k = 1; k < r.values.size(); ++k) {
    if (!(r.values[k] > r.values[k - 1])) r.monotone = false;
  }
  r.rel_gap_at_min_eps = (r.limit_value - r.values.back()) / r.limit_value;
  return r;
}

LocalizationReport localization_experiment(std::shared_ptr<const Domain> domain, const LocalizationParams& params) {
  if (params.distances.empty()) throw std::invalid_argument("distance list is empty");
  for (std::size_t k = 0; k < params.distances.size(); ++k) {
    const double d = params.distances[k];
    if (!(d > 0.0) || !(d < params.radius) || (k > 0 && !(d < params.distances[k - 1]))) {
      throw std::invalid_argument("distances must be strictly decreasing in (0, radius)");
    }
  }
  LocalizationReport r;
  r.label = domain->label();
  r.radius = params.radius;
  r.distances = params.distances;
  std::tie(r.boundary_point, r.inward_normal) = inward_normal(*domain, params.t);
  for (const double d : params.distances) r.points.push_back(r.boundary_point + d * r.inward_normal);

  const Domain u = Domain::disc(r.boundary_point, params.radius, "U");
  auto parts = geometry::boolean_intersect(*domain, u);
  const Domain* local = nullptr;
  for (const auto& p : parts) {
    if (std::all_of(r.points.begin(), r.points.end(), [&](Complex z) { return p.contains(z); })) local = &p;
  }
  if (local == nullptr) throw GeometryError("test points do not lie in one component of U ∩ D");
  const auto local_eval = make_evaluator(shared(*local), params.method, params.options);
  const auto full_eval = make_evaluator(domain, params.method, params.options);
  for (const Complex z : r.points) {
    r.c_local.push_back(local_eval(z));
    r.c_full.push_back(full_eval(z));
    r.ratios.push_back(r.c_local.back() / r.c_full.back());
  }
  r.asymptotic = std::abs(r.ratios.back() - 1.0) <= params.tol;
  return r;
}

}  // namespace carath::harness
