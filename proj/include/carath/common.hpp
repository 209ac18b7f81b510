#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace carath {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate or invalid geometry: self-intersections, tangential contact,
/// points outside a domain or on its boundary.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine could not deliver a trustworthy value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

}  // namespace carath
