#pragma once

#include <memory>
#include <string>
#include <vector>

#include "carath/extremal/lp.hpp"
#include "carath/geometry/domain.hpp"
#include "carath/kernels/evaluator.hpp"

namespace carath::extremal {

using geometry::Domain;

struct ExtremalParams {
  int degree = 24;
  int samples_per_curve = 512;
  int angle_count = 64;
  int check_factor = 10;
  /// Terms (s/(w-q))^k, k = 1..reflection_terms, with q the mirror image of
  /// the base point in the nearest boundary point.
  int reflection_terms = 8;
  LpOptions lp;
};

/// Finite-dimensional version of sup{Re f'(a) : f holomorphic, |f| <= 1, f(a) = 0}.
struct ExtremalProblem {
  std::shared_ptr<const Domain> domain;
  Complex base_point;
  int degree = 24;
  std::vector<Complex> poles;             ///< one per hole
  std::vector<Complex> reflection_poles;  ///< exterior poles near the base point
  int reflection_terms = 0;
  std::vector<Complex> boundary_samples;  ///< LP constraint points
  std::vector<Complex> check_samples;     ///< certification grid
  int angle_count = 64;
  LpOptions lp;

  static ExtremalProblem make(std::shared_ptr<const Domain> domain, Complex a, const ExtremalParams& params = {});
};

struct ExtremalCertificate {
  std::vector<Complex> coefficients;
  double raw_lp_value = 0.0;
  double certified_value = 0.0;
  double sup_check = 0.0;
  int lp_iterations = 0;
  bool lp_optimal = false;
};

/// Pole p with scale r contributes (r/(w-p))^k - (r/(a-p))^k, k = 1..terms.
struct PoleTerms {
  Complex pole;
  double scale = 1.0;
  int terms = 0;
};

/// Basis of functions holomorphic near the closed domain and vanishing at a:
/// ((w-c)/rho)^k - ((a-c)/rho)^k, k = 1..degree, plus pole terms.
class HolomorphicBasis {
 public:
  HolomorphicBasis(Complex a, Complex center, double rho, int degree, std::vector<PoleTerms> poles);

  int size() const { return size_; }
  /// Values of all basis functions at w, written to out[0..size()).
  void values(Complex w, Complex* out) const;
  /// Derivatives of all basis functions at the base point.
  std::vector<Complex> derivatives_at_base() const;

 private:
  Complex a_;
  Complex center_;
  double rho_;
  int degree_;
  std::vector<PoleTerms> poles_;
  int size_ = 0;
  std::vector<Complex> offsets_;  // basis values at a before subtraction
};

/// One point per hole: the hole's area centroid, or the deepest interior
/// point of the hole when the centroid falls outside it.
std::vector<Complex> choose_poles(const Domain& domain);

/// Certified lower bound raw * cos(pi/K) / sup_check on c_D(a).
ExtremalCertificate lp_caratheodory_lower(const ExtremalProblem& problem);

struct FieldValue {
  Complex point;
  double value = 0.0;
  bool ok = false;
  std::string error;
};

/// Certified values on a batch of points; failures are reported per point.
std::vector<FieldValue> lp_metric_field(std::shared_ptr<const Domain> domain, const std::vector<Complex>& grid,
                                        const ExtremalParams& params = {});

kernels::MetricEvaluator lp_evaluator(std::shared_ptr<const Domain> domain, ExtremalParams params = {});

}  // namespace carath::extremal
