#include "carath/geometry/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "carath/geometry/quadrature.hpp"

namespace carath::geometry {

std::vector<Complex> equal_arclength_samples(const std::function<Complex(double)>& param, int n) {
  if (n < 8) throw std::invalid_argument("need at least 8 samples");
  // Dense spectral representation of the input parametrization.
  const int dense = std::max(2048, 4 * n);
  std::vector<Complex> pts(dense);
  for (int j = 0; j < dense; ++j) pts[j] = param(static_cast<double>(j) / dense);
  const TrigCurve carrier(std::move(pts));
  auto speed = [&](double s) { return std::abs(carrier.jet(s).d1); };

  const int cells = 4 * n;
  std::vector<double> cumulative(cells + 1, 0.0);
  for (int k = 0; k < cells; ++k) {
    cumulative[k + 1] = cumulative[k] + gauss_legendre(speed, static_cast<double>(k) / cells,
                                                       static_cast<double>(k + 1) / cells, 1);
  }
  const double total = cumulative.back();

  std::vector<Complex> out(n);
  for (int j = 0; j < n; ++j) {
    const double target = total * j / n;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    int k = static_cast<int>(std::distance(cumulative.begin(), it)) - 1;
    k = std::clamp(k, 0, cells - 1);
    const double left = static_cast<double>(k) / cells;
    double s = left + (target - cumulative[k]) / std::max(speed(left), 1e-300);
    for (int it_n = 0; it_n < 30; ++it_n) {
      const double arc = cumulative[k] + gauss_legendre(speed, left, s, 1);
      const double step = (arc - target) / speed(s);
      s -= step;
      if (std::abs(step) < 1e-15) break;
    }
    out[j] = carrier(s);
  }
  return out;
}

ParamCurve ellipse_curve(Complex center, double a, double b, int n) {
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("ellipse semi-axes must be positive");
  auto pts = equal_arclength_samples(
      [&](double t) { return center + Complex(a * std::cos(kTwoPi * t), b * std::sin(kTwoPi * t)); }, n);
  return ParamCurve::from_samples(pts);
}

ParamCurve fourier_blob_curve(Complex center, double radius, const std::vector<FourierMode>& modes, int n) {
  if (!(radius > 0.0)) throw std::invalid_argument("blob radius must be positive");
  auto r = [&](double theta) {
    double v = 1.0;
    for (const auto& m : modes) v += m.amplitude * std::cos(m.mode * theta + m.phase);
    return radius * v;
  };
  for (int j = 0; j < 720; ++j) {
    if (r(kTwoPi * j / 720.0) <= 0.0) throw std::invalid_argument("blob radius function must stay positive");
  }
  auto pts = equal_arclength_samples(
      [&](double t) {
        const double theta = kTwoPi * t;
        return center + std::polar(r(theta), theta);
      },
      n);
  return ParamCurve::from_samples(pts);
}

}  // namespace carath::geometry
