#pragma once

#include <string>
#include <vector>

#include "carath/harness/suites.hpp"

namespace carath::harness {

/// Shortest round-trip-stable text for a double ("%.12g").
std::string num(double v);

std::string metric_csv(const std::vector<Complex>& points, const std::vector<double>& values,
                       const std::string& kind);
std::string curvature_csv(const std::vector<curvature::CurvatureEstimate>& estimates);
std::string suita_csv(const SuitaReport& report);
std::string solynin_csv(const SolyninReport& report);
/// Columns re,im,c_int,c_uni,c_d1,c_d2,ratio,component,kappa1,kappa2.
std::string pair_csv(const PairReport& report);
/// One row: d1,d2,components,points,dropped,max_ratio,C_hat,bound,tol_rel,pass.
std::string pair_summary_csv(const PairReport& report);
std::string convergence_csv(const ConvergenceReport& report);
std::string localization_csv(const LocalizationReport& report);

/// Heatmap of the ratio over the grid with the boundaries of D1 and D2.
std::string pair_svg(const PairReport& report, const Domain& d1, const Domain& d2, double spacing);

}  // namespace carath::harness
