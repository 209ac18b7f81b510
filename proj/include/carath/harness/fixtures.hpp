#pragma once

#include <memory>
#include <string>
#include <vector>

#include "carath/geometry/domain.hpp"
#include "carath/geometry/shapes.hpp"

namespace carath::harness {

using geometry::Domain;

namespace fixtures {

Domain unit_disc();
/// Ellipse x^2/4 + y^2 < 1.
Domain ellipse();
/// Star-shaped blob with three Fourier modes around the origin.
Domain blob();
/// Annulus 0.5 < |z| < 1.
Domain annulus();
/// Blob with one circular hole.
Domain one_hole_blob();
/// Disc overlapping the right side of one_hole_blob() without touching the hole.
Domain blob_partner_disc();
/// Lens |z + 0.5| < 1 and |z - 0.5| < 1.
Domain lens();
/// Union of the same two discs.
Domain two_disc_union();

struct DiscPair {
  std::string name;
  Domain first;
  Domain second;
};

/// symmetric, asymmetric, near-tangent (centers +-0.999) and nested pairs.
std::vector<DiscPair> disc_pairs();

/// Shipped domains by name: unit_disc, ellipse, blob, annulus, one_hole_blob,
/// blob_partner_disc, lens, two_disc_union. Throws std::invalid_argument.
Domain by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace fixtures

}  // namespace carath::harness
