#pragma once

#include <memory>
#include <string>
#include <vector>

#include "carath/curvature/curvature.hpp"
#include "carath/harness/methods.hpp"

namespace carath::harness {

using geometry::DiscShape;

// ---------------------------------------------------------------------------
// Suita bound kappa <= -4

struct SuitaParams {
  double delta = 0.1;
  double spacing = 0.1;
  /// Stencil spacing of the scan; <= 0 means min(0.01, delta / 10).
  double h = 0.0;
  double tol = 1e-3;
  /// Inward-normal samples from the outer boundary point at parameter trend_t.
  std::vector<double> trend_distances = {0.08, 0.04, 0.02};
  double trend_t = 0.0;
  Method method = Method::automatic;
  MethodOptions options;
};

struct TrendPoint {
  double distance = 0.0;
  curvature::CurvatureEstimate estimate;
};

struct SuitaReport {
  curvature::CurvatureScan scan;
  std::vector<TrendPoint> trend;
  double tol = 0.0;
  int violations = 0;  ///< estimates above -4 + tol, trend included
  /// |kappa + 4| strictly decreasing along the trend.
  bool trend_decreasing = false;
  bool pass = false;
};

SuitaReport verify_suita(std::shared_ptr<const Domain> domain, const SuitaParams& params = {});

// ---------------------------------------------------------------------------
// Poincaré baseline on two discs

struct SolyninPoint {
  Complex z;
  double lambda_int = 0.0;
  double lambda_uni = 0.0;
  double lambda_1 = 0.0;
  double lambda_2 = 0.0;
  double ratio = 0.0;
};

struct SolyninReport {
  DiscShape first;
  DiscShape second;
  bool nested = false;
  std::vector<SolyninPoint> points;
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  /// Ratio at the midpoint of the two circle crossings (overlapping case)
  /// or at the centre of the smaller disc (nested case).
  Complex center;
  double center_ratio = 0.0;
  /// Nested: |ratio - 1| <= 1e-10 everywhere. Otherwise max_ratio <= 1 + 1e-8.
  bool pass = false;
  bool strict = false;  ///< max_ratio < 1
};

/// lambda_{D1 ∩ D2} lambda_{D1 ∪ D2} / (lambda_{D1} lambda_{D2}) from closed
/// forms on grid_sample(D1 ∩ D2, delta, spacing).
SolyninReport verify_solynin_two_discs(const DiscShape& first, const DiscShape& second, double delta, double spacing);

// ---------------------------------------------------------------------------
// Submultiplicativity c_∩ c_∪ <= C c_1 c_2

struct SubmultParams {
  double delta = 0.05;
  double spacing = 0.05;
  /// Stencil spacing for the curvature of D1 and D2; <= 0 means min(0.01, delta / 10).
  double h = 0.0;
  double tol_rel = 0.02;
  Method method = Method::automatic;
  MethodOptions options;
};

struct PairPoint {
  int component = 0;
  Complex z;
  double c_int = 0.0;
  double c_uni = 0.0;
  double c_d1 = 0.0;
  double c_d2 = 0.0;
  double ratio = 0.0;
  double kappa1 = 0.0;  ///< refined curvature of c_{D1}
  double kappa2 = 0.0;
};

struct PairReport {
  std::string label1;
  std::string label2;
  int components = 0;
  std::vector<PairPoint> points;
  int dropped = 0;  ///< grid points where a metric or curvature failed
  double max_ratio = 0.0;
  double c_hat = 0.0;  ///< max over points of -(kappa1 + kappa2)
  double bound = 0.0;  ///< sqrt(c_hat / 4)
  double tol_rel = 0.0;
  bool pass = false;   ///< max_ratio <= bound (1 + tol_rel)
  std::string kind_int;
  std::string kind_uni;
  std::string kind_1;
  std::string kind_2;
};

/// Throws GeometryError when the domains are disjoint, the union is
/// disconnected or a component grid is empty.
PairReport verify_submult(std::shared_ptr<const Domain> d1, std::shared_ptr<const Domain> d2,
                          const SubmultParams& params = {});

// ---------------------------------------------------------------------------
// eps-thickening convergence

struct ConvergenceReport {
  std::string label;
  Complex point;
  std::vector<double> eps;
  std::vector<double> values;  ///< c of the eps-thickening at point
  double limit_value = 0.0;    ///< c of the domain itself
  bool monotone = false;       ///< values strictly increasing as eps decreases
  double rel_gap_at_min_eps = 0.0;
};

/// eps must be strictly decreasing and positive.
ConvergenceReport converge_thickening(const Domain& domain, Complex point, const std::vector<double>& eps,
                                      Method method = Method::automatic, const MethodOptions& options = {});

// ---------------------------------------------------------------------------
// Boundary localization c_{U∩D} / c_D

struct LocalizationParams {
  double t = 0.0;  ///< parameter on the outer curve
  double radius = 0.5;
  std::vector<double> distances = {0.1, 0.05, 0.02};
  double tol = 0.05;
  Method method = Method::automatic;
  MethodOptions options;
};

struct LocalizationReport {
  std::string label;
  Complex boundary_point;
  Complex inward_normal;
  double radius = 0.0;
  std::vector<double> distances;
  std::vector<Complex> points;
  std::vector<double> c_local;
  std::vector<double> c_full;
  std::vector<double> ratios;
  /// Last ratio within tol of 1.
  bool asymptotic = false;
};

/// U is the disc of the given radius about the boundary point. Throws
/// GeometryError at a corner or when the test points do not lie in one
/// component of U ∩ D.
LocalizationReport localization_experiment(std::shared_ptr<const Domain> domain, const LocalizationParams& params = {});

}  // namespace carath::harness
