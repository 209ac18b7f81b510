#include "carath/geometry/offset.hpp"

#include <cmath>
#include <stdexcept>

namespace carath::geometry {

namespace {

constexpr double kSmoothTurn = 1e-8;

void check_reach(const Segment& seg, double total_offset) {
  constexpr int samples = 256;
  for (int k = 0; k <= samples; ++k) {
    const double u = static_cast<double>(k) / samples;
    if (1.0 + total_offset * seg.base_curvature(u) <= 1e-3) {
      throw GeometryError("offset distance exceeds the reach of the boundary");
    }
  }
}

}  // namespace

ParamCurve offset_curve(const ParamCurve& curve, double eps) {
  const auto& segs = curve.segments();
  const std::size_t n = segs.size();
  std::vector<Segment> moved(n);
  for (std::size_t i = 0; i < n; ++i) {
    check_reach(segs[i], segs[i].offset + eps);
    moved[i] = segs[i];
    moved[i].offset += eps;
  }
  if (n == 1 && std::abs(std::abs(segs[0].s1 - segs[0].s0) - 1.0) < 1e-14) {
    return ParamCurve(std::move(moved), true);
  }

  std::vector<double> trim_start(n, 0.0);
  std::vector<double> trim_end(n, 0.0);
  std::vector<std::optional<Segment>> caps(n);  // cap inserted before segment i
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const PointJet a = segs[prev].jet(1.0);
    const PointJet b = segs[i].jet(0.0);
    const double turn = std::arg(b.d1 / a.d1);
    if (std::abs(turn) < kSmoothTurn) continue;
    const Complex corner = b.z;
    if (turn > 0.0) {
      const Complex normal_out = Complex(0.0, -1.0) * a.d1 / std::abs(a.d1);
      const double angle0 = std::arg(normal_out);
      caps[i] = Segment{TrigCurve::circle(corner, eps), angle0 / kTwoPi, (angle0 + turn) / kTwoPi, 0.0};
    } else {
      // Offset pieces overlap near a right turn: cut both at their crossing.
      const PointJet ea = moved[prev].jet(1.0);
      const PointJet eb = moved[i].jet(0.0);
      const double back = eps * std::tan(0.5 * std::abs(turn));
      double x = back / std::abs(ea.d1);
      double y = back / std::abs(eb.d1);
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        const PointJet ja = moved[prev].jet(1.0 - x);
        const PointJet jb = moved[i].jet(y);
        // ja.z - ja.d1 dx = jb.z + jb.d1 dy  =>  (-ja.d1) dx - jb.d1 dy = jb.z - ja.z
        const Complex r = jb.z - ja.z;
        const Complex ca = -ja.d1;
        const Complex cb = -jb.d1;
        const double det = cross(ca, cb);
        if (det == 0.0) break;
        const double dx = cross(r, cb) / det;
        const double dy = -cross(r, ca) / det;
        x += dx;
        y += dy;
        if (std::abs(dx) + std::abs(dy) < 1e-15) {
          ok = true;
          break;
        }
      }
      if (!ok || !(x > 0.0 && y > 0.0 && x < 1.0 && y < 1.0)) {
        throw GeometryError("offset at a reflex corner failed; eps too large");
      }
      trim_end[prev] = x;
      trim_start[i] = y;
    }
  }

  std::vector<Segment> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (caps[i]) out.push_back(*caps[i]);
    if (trim_start[i] + trim_end[i] >= 1.0) throw GeometryError("offset distance consumes a boundary piece");
    out.push_back(moved[i].sub(trim_start[i], 1.0 - trim_end[i]));
  }
  return ParamCurve(std::move(out), true);
}

Domain thicken(const Domain& domain, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("thickening distance must be positive");
  const auto& bnd = domain.boundary();
  ParamCurve outer = offset_curve(bnd[0], eps);
  if (outer.signed_area() <= domain.outer().signed_area()) throw GeometryError("thickening failed for the outer curve");
  std::vector<ParamCurve> holes;
  for (std::size_t k = 1; k < bnd.size(); ++k) {
    ParamCurve h = offset_curve(bnd[k], eps);
    if (!(h.signed_area() < 0.0)) throw GeometryError("thickening changes the connectivity (a hole vanished)");
    holes.push_back(h.reversed());
  }
  ClosedForm cf;
  if (const auto* d = std::get_if<DiscShape>(&domain.closed_form())) {
    cf = DiscShape{d->center, d->radius + eps};
  } else if (const auto* an = std::get_if<AnnulusShape>(&domain.closed_form())) {
    cf = AnnulusShape{an->center, an->inner - eps, an->outer + eps};
  }
  try {
    return Domain(std::move(outer), std::move(holes), domain.label() + "+eps", cf);
  } catch (const GeometryError&) {
    throw GeometryError("thickening changes the connectivity");
  }
}

}  // namespace carath::geometry
