#pragma once

#include "carath/geometry/domain.hpp"

namespace carath::kernels {

using geometry::AnnulusShape;
using geometry::DiscShape;
using geometry::RegionKind;
using geometry::TwoDiscRegion;

/// Poincaré density R / (R^2 - |z - center|^2) of a disc (equal to its Carathéodory density).
double disc_metric(Complex center, double radius, Complex z);

/// Poincaré density of the intersection or union of two transversally
/// overlapping discs, via a Möbius map onto a sector and a power map onto
/// the upper half-plane.
double poincare_two_disc_regions(const DiscShape& first, const DiscShape& second, RegionKind which, Complex z);

/// Poincaré density of the annulus r_inner < |z| < 1:
/// pi / (2 h |z| sin(pi log(1/|z|) / h)), h = log(1/r_inner).
double poincare_annulus(double r_inner, Complex z);

/// General annulus by translation and scaling.
double poincare_annulus(const AnnulusShape& shape, Complex z);

/// Sector picture of a two-disc region: M(z) = (z - p) / (z - q) sends the
/// region onto {arg in (start, start + opening)}.
struct SectorMap {
  Complex p;
  Complex q;
  double start = 0.0;
  double opening = 0.0;
};

SectorMap two_disc_sector(const DiscShape& first, const DiscShape& second, RegionKind which);

}  // namespace carath::kernels
