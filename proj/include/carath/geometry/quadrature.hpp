#pragma once

#include <array>

namespace carath::geometry {

/// Composite 8-point Gauss-Legendre rule on [a, b] with `panels` panels.
template <class F>
auto gauss_legendre(F&& f, double a, double b, int panels) {
  static constexpr std::array<double, 4> x = {0.1834346424956498, 0.5255324099163290,
                                              0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> w = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};
  using R = decltype(f(a));
  R total{};
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    R acc{};
    for (std::size_t k = 0; k < x.size(); ++k) {
      acc += w[k] * (f(mid - half * x[k]) + f(mid + half * x[k]));
    }
    total += half * acc;
  }
  return total;
}

}  // namespace carath::geometry
