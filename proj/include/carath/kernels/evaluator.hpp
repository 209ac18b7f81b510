#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "carath/kernels/szego.hpp"

namespace carath::kernels {

enum class MetricKind {
  closed_form_disc,
  closed_form_sector_pullback,
  closed_form_annulus_poincare,
  szego,
  lp,
  custom,
};

std::string to_string(MetricKind kind);

/// Metric density z -> c(z) (or lambda(z)) on a domain, with a value cache.
///
/// Copies share the cache. Evaluation is thread-safe.
class MetricEvaluator {
 public:
  using Function = std::function<double(Complex)>;

  MetricEvaluator(MetricKind kind, std::shared_ptr<const Domain> domain, Function fn);

  /// Throws NumericalError for a non-positive value.
  double operator()(Complex z) const;

  MetricKind kind() const { return kind_; }
  /// May be null for custom evaluators without a domain.
  const std::shared_ptr<const Domain>& domain() const { return domain_; }
  std::size_t cache_size() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<double, double>, double> values;
  };

  MetricKind kind_;
  std::shared_ptr<const Domain> domain_;
  Function fn_;
  std::shared_ptr<Cache> cache_;
};

/// Carathéodory density for domains whose closed form is simply connected
/// (disc or two-disc region), where it equals the Poincaré density. Throws
/// std::invalid_argument otherwise.
MetricEvaluator closed_form_evaluator(std::shared_ptr<const Domain> domain);

/// Poincaré density from any closed form, the annulus included.
MetricEvaluator poincare_evaluator(std::shared_ptr<const Domain> domain);

/// Whether closed_form_evaluator accepts the domain.
bool has_closed_form_caratheodory(const Domain& domain);

struct SzegoOptions {
  int n_min = 128;
  int n_max = 2048;
  /// Mesh spacing is kept below dist_to_boundary / distance_factor.
  double distance_factor = 4.0;
  /// Fixed n per curve instead of the distance policy (0 = policy).
  int fixed_n = 0;
};

/// 2 pi S(z, z) with meshes chosen per point and factorizations reused.
MetricEvaluator szego_evaluator(std::shared_ptr<const Domain> domain, SzegoOptions options = {});

MetricEvaluator constant_evaluator(double value);

}  // namespace carath::kernels
