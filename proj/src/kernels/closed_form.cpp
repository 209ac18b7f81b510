#include "carath/kernels/closed_form.hpp"

#include <cmath>

namespace carath::kernels {

namespace {

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

bool in_disc(const DiscShape& d, Complex z) { return std::abs(z - d.center) < d.radius; }

bool in_region(const DiscShape& a, const DiscShape& b, RegionKind which, Complex z) {
  return which == RegionKind::intersection ? (in_disc(a, z) && in_disc(b, z)) : (in_disc(a, z) || in_disc(b, z));
}

}  // namespace

double disc_metric(Complex center, double radius, Complex z) {
  const double r2 = std::norm(z - center);
  if (!(r2 < radius * radius)) throw GeometryError("point is outside the disc");
  return radius / (radius * radius - r2);
}

SectorMap two_disc_sector(const DiscShape& first, const DiscShape& second, RegionKind which) {
  const Complex c1 = first.center;
  const Complex c2 = second.center;
  const double r1 = first.radius;
  const double r2 = second.radius;
  const double d = std::abs(c2 - c1);
  if (!(d < r1 + r2) || !(d > std::abs(r1 - r2))) throw GeometryError("circles do not cross transversally");
  const Complex u = (c2 - c1) / d;
  // Crossing points along the line of centers at distance x from c1.
  const double x = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double y = std::sqrt(r1 * r1 - x * x);
  SectorMap s;
  s.p = c1 + u * Complex(x, y);
  s.q = c1 + u * Complex(x, -y);
  auto mobius = [&](Complex z) { return (z - s.p) / (z - s.q); };
  // Each arc of a circle maps to a ray; pick the arcs bounding the region.
  const double sign = which == RegionKind::intersection ? 1.0 : -1.0;
  const double t1 = std::arg(mobius(c1 + sign * r1 * u));
  const double t2 = std::arg(mobius(c2 - sign * r2 * u));
  // The region contains the point of the line of centers between the arcs.
  const Complex probe = which == RegionKind::intersection ? c1 + u * (0.5 * ((d - r2) + r1))
                                                          : c1 - u * (0.5 * r1);
  const double phi = wrap_angle(std::arg(mobius(probe)) - t1);
  const double open12 = wrap_angle(t2 - t1);
  if (phi < open12) {
    s.start = t1;
    s.opening = open12;
  } else {
    s.start = t2;
    s.opening = kTwoPi - open12;
  }
  return s;
}

double poincare_two_disc_regions(const DiscShape& first, const DiscShape& second, RegionKind which, Complex z) {
  if (!in_region(first, second, which, z)) throw GeometryError("point is outside the two-disc region");
  const SectorMap s = two_disc_sector(first, second, which);
  const Complex zeta = (z - s.p) / (z - s.q);
  const Complex dm = (s.p - s.q) / ((z - s.q) * (z - s.q));
  const double phi = wrap_angle(std::arg(zeta) - s.start);
  const double k = kPi / s.opening;
  return k * std::abs(dm) / (2.0 * std::abs(zeta) * std::sin(k * phi));
}

double poincare_annulus(double r_inner, Complex z) {
  const double r = std::abs(z);
  if (!(r_inner > 0.0 && r_inner < 1.0)) throw std::invalid_argument("inner radius must lie in (0, 1)");
  if (!(r > r_inner && r < 1.0)) throw GeometryError("point is outside the annulus");
  const double h = std::log(1.0 / r_inner);
  return kPi / (2.0 * h * r * std::sin(kPi * std::log(1.0 / r) / h));
}

double poincare_annulus(const AnnulusShape& shape, Complex z) {
  return poincare_annulus(shape.inner / shape.outer, (z - shape.center) / shape.outer) / shape.outer;
}

}  // namespace carath::kernels
