#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "carath/geometry/curve.hpp"

namespace carath::geometry {

struct DiscShape {
  Complex center;
  double radius = 1.0;
};

enum class RegionKind { intersection, union_ };

/// Intersection or union of two transversally overlapping discs.
struct TwoDiscRegion {
  DiscShape first;
  DiscShape second;
  RegionKind kind = RegionKind::intersection;
};

struct AnnulusShape {
  Complex center;
  double inner = 0.5;
  double outer = 1.0;
};

/// Exact description of a domain when one is known; enables closed-form metrics.
using ClosedForm = std::variant<std::monostate, DiscShape, TwoDiscRegion, AnnulusShape>;

struct BoundaryPoint {
  std::size_t curve = 0;  ///< index into Domain::boundary()
  double t = 0.0;
  Complex point;
  double distance = 0.0;
};

struct Box {
  double xmin, xmax, ymin, ymax;
};

/// Bounded finitely connected planar domain: one outer curve and zero or more holes.
///
/// Curves are stored counterclockwise. boundary() lists them with the positive
/// orientation of the domain (outer counterclockwise, holes clockwise).
class Domain {
 public:
  Domain(ParamCurve outer, std::vector<ParamCurve> holes = {}, std::string label = {},
         ClosedForm closed_form = {});

  static Domain disc(Complex center, double radius, std::string label = "disc");
  static Domain annulus(Complex center, double inner, double outer, std::string label = "annulus");

  const ParamCurve& outer() const { return outer_; }
  const std::vector<ParamCurve>& holes() const { return holes_; }
  const std::vector<ParamCurve>& boundary() const { return boundary_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const ClosedForm& closed_form() const { return closed_form_; }
  void set_closed_form(ClosedForm cf) { closed_form_ = cf; }

  int connectivity() const { return 1 + static_cast<int>(holes_.size()); }
  bool has_corners() const;
  double area() const;
  double perimeter() const;
  Box bounding_box() const;
  double diameter() const;

  /// Membership test; throws GeometryError when z is within 1e-12 of the boundary.
  bool contains(Complex z) const;
  /// Distance to the boundary for an interior point; throws GeometryError otherwise.
  double dist_to_boundary(Complex z) const;
  BoundaryPoint closest_boundary_point(Complex z) const;

 private:
  ParamCurve outer_;
  std::vector<ParamCurve> holes_;
  std::vector<ParamCurve> boundary_;
  std::string label_;
  ClosedForm closed_form_;
};

}  // namespace carath::geometry
