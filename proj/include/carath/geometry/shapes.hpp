#pragma once

#include <functional>
#include <vector>

#include "carath/geometry/domain.hpp"

namespace carath::geometry {

/// One term amp * cos(mode * theta + phase) of a radial perturbation.
struct FourierMode {
  int mode = 0;
  double amplitude = 0.0;
  double phase = 0.0;
};

/// Resamples a closed parametrized curve theta -> z(theta), theta in [0, 1),
/// at n points equally spaced in arclength, starting at z(0).
std::vector<Complex> equal_arclength_samples(const std::function<Complex(double)>& param, int n);

/// Ellipse center + a cos + i b sin, sampled at n points equally spaced in arclength.
ParamCurve ellipse_curve(Complex center, double a, double b, int n = 512);

/// Star-shaped curve r(theta) = radius * (1 + sum amp_k cos(mode_k theta + phase_k)).
ParamCurve fourier_blob_curve(Complex center, double radius, const std::vector<FourierMode>& modes,
                              int n = 512);

}  // namespace carath::geometry
