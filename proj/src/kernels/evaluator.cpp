#include "carath/kernels/evaluator.hpp"

#include <cmath>
#include <stdexcept>

#include "carath/kernels/closed_form.hpp"

namespace carath::kernels {

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::closed_form_disc: return "closed_form_disc";
    case MetricKind::closed_form_sector_pullback: return "closed_form_sector_pullback";
    case MetricKind::closed_form_annulus_poincare: return "closed_form_annulus_poincare";
    case MetricKind::szego: return "szego";
    case MetricKind::lp: return "lp";
    case MetricKind::custom: return "custom";
  }
  return "unknown";
}

MetricEvaluator::MetricEvaluator(MetricKind kind, std::shared_ptr<const Domain> domain, Function fn)
    : kind_(kind), domain_(std::move(domain)), fn_(std::move(fn)), cache_(std::make_shared<Cache>()) {
  if (!fn_) throw std::invalid_argument("metric evaluator needs a function");
}

double MetricEvaluator::operator()(Complex z) const {
  const std::pair<double, double> key{z.real(), z.imag()};
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  const double v = fn_(z);
  if (!(v > 0.0) || !std::isfinite(v)) throw NumericalError("metric value is not positive and finite");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(key, v);
  return v;
}

std::size_t MetricEvaluator::cache_size() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->values.size();
}

bool has_closed_form_caratheodory(const Domain& domain) {
  return std::holds_alternative<DiscShape>(domain.closed_form()) ||
         std::holds_alternative<TwoDiscRegion>(domain.closed_form());
}

MetricEvaluator poincare_evaluator(std::shared_ptr<const Domain> domain) {
  const auto& cf = domain->closed_form();
  if (const auto* d = std::get_if<DiscShape>(&cf)) {
    const DiscShape disc = *d;
    return MetricEvaluator(MetricKind::closed_form_disc, domain,
                           [disc](Complex z) { return disc_metric(disc.center, disc.radius, z); });
  }
  if (const auto* r = std::get_if<TwoDiscRegion>(&cf)) {
    const TwoDiscRegion region = *r;
    return MetricEvaluator(MetricKind::closed_form_sector_pullback, domain, [region](Complex z) {
      return poincare_two_disc_regions(region.first, region.second, region.kind, z);
    });
  }
  if (const auto* a = std::get_if<AnnulusShape>(&cf)) {
    const AnnulusShape annulus = *a;
    return MetricEvaluator(MetricKind::closed_form_annulus_poincare, domain,
                           [annulus](Complex z) { return poincare_annulus(annulus, z); });
  }
  throw std::invalid_argument("domain has no closed-form Poincaré metric");
}

MetricEvaluator closed_form_evaluator(std::shared_ptr<const Domain> domain) {
  if (!has_closed_form_caratheodory(*domain)) {
    throw std::invalid_argument("domain has no closed-form Carathéodory metric");
  }
  return poincare_evaluator(std::move(domain));
}

namespace {

class SzegoBackend {
 public:
  SzegoBackend(std::shared_ptr<const Domain> domain, SzegoOptions options)
      : domain_(std::move(domain)), options_(options) {}

  double operator()(Complex z) {
    if (!domain_->contains(z)) throw GeometryError("point is outside the domain");
    const int n = options_.fixed_n > 0
                      ? options_.fixed_n
                      : szego_resolution(*domain_, z, options_.distance_factor, options_.n_min, options_.n_max);
    return solver(n).solve(z).caratheodory();
  }

 private:
  const KerzmanStein& solver(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = solvers_.find(n);
    if (it == solvers_.end()) {
      auto mesh = std::make_shared<const BoundaryMesh>(geometry::mesh_boundary(domain_, n));
      it = solvers_.emplace(n, std::make_unique<KerzmanStein>(mesh)).first;
    }
    return *it->second;
  }

  std::shared_ptr<const Domain> domain_;
  SzegoOptions options_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<KerzmanStein>> solvers_;
};

}  // namespace

MetricEvaluator szego_evaluator(std::shared_ptr<const Domain> domain, SzegoOptions options) {
  auto backend = std::make_shared<SzegoBackend>(domain, options);
  return MetricEvaluator(MetricKind::szego, std::move(domain), [backend](Complex z) { return (*backend)(z); });
}

MetricEvaluator constant_evaluator(double value) {
  return MetricEvaluator(MetricKind::custom, nullptr, [value](Complex) { return value; });
}

}  // namespace carath::kernels
