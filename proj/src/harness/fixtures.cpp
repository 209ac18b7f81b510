#include "carath/harness/fixtures.hpp"

#include <stdexcept>

#include "carath/geometry/boolean.hpp"

namespace carath::harness::fixtures {

using geometry::FourierMode;
using geometry::ParamCurve;

Domain unit_disc() { return Domain::disc(0.0, 1.0, "unit_disc"); }

Domain ellipse() { return Domain(geometry::ellipse_curve(0.0, 2.0, 1.0), {}, "ellipse"); }

Domain blob() {
  const std::vector<FourierMode> modes = {{2, 0.10, 0.0}, {3, 0.07, 0.6}, {5, 0.03, 1.3}};
  return Domain(geometry::fourier_blob_curve(0.0, 1.0, modes), {}, "blob");
}

Domain annulus() { return Domain::annulus(0.0, 0.5, 1.0, "annulus"); }

Domain one_hole_blob() {
  const std::vector<FourierMode> modes = {{2, 0.08, 0.3}, {3, 0.06, 1.1}, {4, 0.03, 0.2}};
  return Domain(geometry::fourier_blob_curve(0.0, 1.2, modes), {ParamCurve::circle(Complex(-0.15, 0.05), 0.4)},
                "one_hole_blob");
}

Domain blob_partner_disc() { return Domain::disc(Complex(1.2, 0.2), 0.75, "partner_disc"); }

Domain lens() {
  auto parts = geometry::boolean_intersect(Domain::disc(-0.5, 1.0, "discL"), Domain::disc(0.5, 1.0, "discR"));
  Domain d = std::move(parts.at(0));
  d.set_label("lens");
  return d;
}

Domain two_disc_union() {
  Domain d = geometry::boolean_union(Domain::disc(-0.5, 1.0, "discL"), Domain::disc(0.5, 1.0, "discR"));
  d.set_label("two_disc_union");
  return d;
}

std::vector<DiscPair> disc_pairs() {
  return {
      {"symmetric", Domain::disc(-0.5, 1.0, "discL"), Domain::disc(0.5, 1.0, "discR")},
      {"asymmetric", Domain::disc(-0.4, 1.0, "discA"), Domain::disc(Complex(0.6, 0.2), 0.7, "discB")},
      {"near_tangent", Domain::disc(-0.999, 1.0, "discNL"), Domain::disc(0.999, 1.0, "discNR")},
      {"nested", Domain::disc(0.0, 0.5, "inner"), Domain::disc(0.0, 1.0, "outer")},
  };
}

std::vector<std::string> names() {
  return {"unit_disc", "ellipse", "blob", "annulus", "one_hole_blob", "blob_partner_disc", "lens", "two_disc_union"};
}

Domain by_name(const std::string& name) {
  if (name == "unit_disc") return unit_disc();
  if (name == "ellipse") return ellipse();
  if (name == "blob") return blob();
  if (name == "annulus") return annulus();
  if (name == "one_hole_blob") return one_hole_blob();
  if (name == "blob_partner_disc") return blob_partner_disc();
  if (name == "lens") return lens();
  if (name == "two_disc_union") return two_disc_union();
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace carath::harness::fixtures
