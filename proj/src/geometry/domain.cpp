#include "carath/geometry/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace carath::geometry {

namespace {

double polyline_distance(const ParamCurve& c, Complex z) {
  const auto& p = c.polyline();
  const std::size_t n = p.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = p[k];
    const Complex ab = p[(k + 1) % n] - a;
    const double len2 = std::norm(ab);
    const double s = len2 > 0.0 ? std::clamp(dot(z - a, ab) / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, std::abs(z - (a + s * ab)));
  }
  return best;
}

bool near_corner(const ParamCurve& c, double t) {
  for (double b : c.corner_params()) {
    double d = std::abs(t - b);
    d = std::min(d, 1.0 - d);
    if (d < 1e-9) return true;
  }
  return false;
}

// Whether z lies in the bounded region enclosed by the counterclockwise curve c.
bool encloses(const ParamCurve& c, Complex z) {
  const double scale = std::max(1.0, std::abs(z));
  const double dpoly = polyline_distance(c, z);
  if (dpoly > c.polyline_sag() + 1e-9 * scale) return c.winding_number(z) != 0;
  double d = 0.0;
  const double t = c.closest_param(z, &d);
  if (d < 1e-12 * scale) throw GeometryError("point lies on the domain boundary");
  if (near_corner(c, t)) return c.winding_number(z) != 0;
  const PointJet j = c.jet(t);
  return cross(j.d1, z - j.z) > 0.0;
}

}  // namespace

Domain::Domain(ParamCurve outer, std::vector<ParamCurve> holes, std::string label, ClosedForm closed_form)
    : outer_(std::move(outer)), holes_(std::move(holes)), label_(std::move(label)), closed_form_(closed_form) {
  if (outer_.signed_area() < 0.0) outer_ = outer_.reversed();
  for (auto& h : holes_) {
    if (h.signed_area() < 0.0) h = h.reversed();
  }
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    for (const Complex& p : holes_[i].polyline()) {
      if (outer_.winding_number(p) == 0) throw GeometryError("hole is not inside the outer boundary");
    }
    for (std::size_t j = i + 1; j < holes_.size(); ++j) {
      for (const Complex& p : holes_[j].polyline()) {
        if (holes_[i].winding_number(p) != 0) throw GeometryError("holes overlap");
      }
      for (const Complex& p : holes_[i].polyline()) {
        if (holes_[j].winding_number(p) != 0) throw GeometryError("holes overlap");
      }
    }
  }
  boundary_.push_back(outer_);
  for (const auto& h : holes_) boundary_.push_back(h.reversed());
}

Domain Domain::disc(Complex center, double radius, std::string label) {
  return Domain(ParamCurve::circle(center, radius), {}, std::move(label), DiscShape{center, radius});
}

Domain Domain::annulus(Complex center, double inner, double outer, std::string label) {
  if (!(inner > 0.0 && inner < outer)) throw GeometryError("annulus radii must satisfy 0 < inner < outer");
  return Domain(ParamCurve::circle(center, outer), {ParamCurve::circle(center, inner)}, std::move(label),
                AnnulusShape{center, inner, outer});
}

bool Domain::has_corners() const {
  return std::any_of(boundary_.begin(), boundary_.end(), [](const ParamCurve& c) { return !c.is_smooth(); });
}

double Domain::area() const {
  double a = outer_.signed_area();
  for (const auto& h : holes_) a -= h.signed_area();
  return a;
}

double Domain::perimeter() const {
  double l = 0.0;
  for (const auto& c : boundary_) l += c.length();
  return l;
}

Box Domain::bounding_box() const {
  Box b{1e300, -1e300, 1e300, -1e300};
  for (const Complex& p : outer_.polyline()) {
    b.xmin = std::min(b.xmin, p.real());
    b.xmax = std::max(b.xmax, p.real());
    b.ymin = std::min(b.ymin, p.imag());
    b.ymax = std::max(b.ymax, p.imag());
  }
  const double s = outer_.polyline_sag();
  return {b.xmin - s, b.xmax + s, b.ymin - s, b.ymax + s};
}

double Domain::diameter() const {
  const auto& p = outer_.polyline();
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) d = std::max(d, std::norm(p[i] - p[j]));
  }
  return std::sqrt(d) + 2.0 * outer_.polyline_sag();
}

bool Domain::contains(Complex z) const {
  if (!encloses(outer_, z)) return false;
  for (const auto& h : holes_) {
    if (encloses(h, z)) return false;
  }
  return true;
}

BoundaryPoint Domain::closest_boundary_point(Complex z) const {
  std::vector<double> approx(boundary_.size());
  double best_approx = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    approx[i] = polyline_distance(boundary_[i], z);
    best_approx = std::min(best_approx, approx[i]);
  }
  BoundaryPoint best;
  best.distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    if (approx[i] > best_approx + 2.0 * boundary_[i].polyline_sag() + 1e-12) continue;
    double d = 0.0;
    const double t = boundary_[i].closest_param(z, &d);
    if (d < best.distance) best = BoundaryPoint{i, t, boundary_[i].point(t), d};
  }
  return best;
}

double Domain::dist_to_boundary(Complex z) const {
  if (!contains(z)) throw GeometryError("point is outside the domain");
  return closest_boundary_point(z).distance;
}

}  // namespace carath::geometry
