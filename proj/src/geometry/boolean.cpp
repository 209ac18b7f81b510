#include "carath/geometry/boolean.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace carath::geometry {

namespace {

constexpr double kMinCrossingAngle = 1e-3;
constexpr double kMinComponentArea = 1e-10;

struct EdgeBox {
  double x0, x1, y0, y1;
};

std::vector<EdgeBox> chunk_boxes(const std::vector<Complex>& p, std::size_t chunk) {
  const std::size_t n = p.size();
  std::vector<EdgeBox> out((n + chunk - 1) / chunk);
  for (std::size_t c = 0; c < out.size(); ++c) {
    EdgeBox b{1e300, -1e300, 1e300, -1e300};
    for (std::size_t k = c * chunk; k <= std::min(n, (c + 1) * chunk); ++k) {
      const Complex q = p[k % n];
      b.x0 = std::min(b.x0, q.real());
      b.x1 = std::max(b.x1, q.real());
      b.y0 = std::min(b.y0, q.imag());
      b.y1 = std::max(b.y1, q.imag());
    }
    out[c] = b;
  }
  return out;
}

bool edges_meet(Complex a, Complex b, Complex c, Complex d, double& sa, double& sc) {
  const Complex r = b - a;
  const Complex s = d - c;
  const double den = cross(r, s);
  if (den == 0.0) return false;
  sa = cross(c - a, s) / den;
  sc = cross(c - a, r) / den;
  return sa >= 0.0 && sa <= 1.0 && sc >= 0.0 && sc <= 1.0;
}

double edge_param(const ParamCurve& c, std::size_t k, double s) {
  const auto& ts = c.polyline_params();
  const double ta = ts[k];
  const double tb = (k + 1 < ts.size()) ? ts[k + 1] : 1.0;
  return ta + s * (tb - ta);
}

struct Arc {
  std::size_t curve;  // index into the combined oriented curve list
  double ta, tb;      // forward parameter range (tb may exceed 1)
  int start, end;     // crossing ids, -1 for whole closed curves
};

std::string join_label(const Domain& a, const Domain& b, const char* op) {
  return a.label() + op + b.label();
}

enum class Op { intersect, unite };

ClosedForm two_disc_form(const Domain& a, const Domain& b, Op op) {
  const auto* da = std::get_if<DiscShape>(&a.closed_form());
  const auto* db = std::get_if<DiscShape>(&b.closed_form());
  if (da == nullptr || db == nullptr) return {};
  const double d = std::abs(da->center - db->center);
  const DiscShape& small = da->radius <= db->radius ? *da : *db;
  const DiscShape& big = da->radius <= db->radius ? *db : *da;
  if (d + small.radius <= big.radius) return op == Op::intersect ? small : big;
  if (d >= da->radius + db->radius) return {};
  return TwoDiscRegion{*da, *db, op == Op::intersect ? RegionKind::intersection : RegionKind::union_};
}

// Loops of the boundary of a ∩ b or a ∪ b, positively oriented.
std::vector<ParamCurve> boolean_loops(const Domain& a, const Domain& b, Op op) {
  std::vector<const ParamCurve*> curves;
  std::vector<int> owner;
  for (const auto& c : a.boundary()) {
    curves.push_back(&c);
    owner.push_back(0);
  }
  for (const auto& c : b.boundary()) {
    curves.push_back(&c);
    owner.push_back(1);
  }
  const std::size_t na = a.boundary().size();

  // Crossing parameters on every curve.
  std::vector<std::vector<std::pair<double, int>>> marks(curves.size());
  int next_id = 0;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = na; j < curves.size(); ++j) {
      for (const Crossing& x : find_crossings(*curves[i], *curves[j])) {
        marks[i].emplace_back(x.t_first, next_id);
        marks[j].emplace_back(x.t_second, next_id);
        ++next_id;
      }
    }
  }

  const bool want_inside = (op == Op::intersect);
  std::vector<Arc> kept;
  std::vector<ParamCurve> loops;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const Domain& other = owner[c] == 0 ? b : a;
    auto& m = marks[c];
    std::sort(m.begin(), m.end());
    if (m.empty()) {
      if (other.contains(curves[c]->point(0.0)) == want_inside) loops.push_back(*curves[c]);
      continue;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      const double ta = m[k].first;
      const double tb = (k + 1 < m.size()) ? m[k + 1].first : m[0].first + 1.0;
      const int end = (k + 1 < m.size()) ? m[k + 1].second : m[0].second;
      const Complex mid = curves[c]->point(0.5 * (ta + tb));
      if (other.contains(mid) == want_inside) kept.push_back({c, ta, tb, m[k].second, end});
    }
  }

  std::map<int, std::size_t> by_start;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (!by_start.emplace(kept[k].start, k).second) {
      throw GeometryError("inconsistent boundary arcs in boolean operation");
    }
  }
  std::vector<bool> used(kept.size(), false);
  for (std::size_t k0 = 0; k0 < kept.size(); ++k0) {
    if (used[k0]) continue;
    std::vector<Segment> segs;
    std::size_t k = k0;
    std::size_t guard = 0;
    while (!used[k]) {
      used[k] = true;
      const Arc& arc = kept[k];
      auto piece = curves[arc.curve]->subarc(arc.ta, arc.tb);
      segs.insert(segs.end(), piece.begin(), piece.end());
      auto it = by_start.find(arc.end);
      if (it == by_start.end()) throw GeometryError("boundary arcs do not close in boolean operation");
      k = it->second;
      if (++guard > kept.size()) throw GeometryError("boundary arcs do not close in boolean operation");
    }
    if (k != k0) throw GeometryError("boundary arcs do not close in boolean operation");
    loops.emplace_back(std::move(segs), true);
  }
  return loops;
}

std::vector<Domain> assemble(std::vector<ParamCurve> loops, const std::string& label, ClosedForm cf) {
  std::vector<ParamCurve> outers;
  std::vector<ParamCurve> holes;
  for (auto& l : loops) {
    const double area = l.signed_area();
    if (std::abs(area) < kMinComponentArea) continue;
    if (area > 0.0) {
      outers.push_back(std::move(l));
    } else {
      holes.push_back(l.reversed());
    }
  }
  std::vector<std::vector<ParamCurve>> assigned(outers.size());
  for (auto& h : holes) {
    const Complex probe = h.point(0.0);
    std::size_t best = outers.size();
    for (std::size_t o = 0; o < outers.size(); ++o) {
      if (outers[o].winding_number(probe) == 0) continue;
      if (best == outers.size() || outers[o].signed_area() < outers[best].signed_area()) best = o;
    }
    if (best == outers.size()) throw GeometryError("boolean operation produced an unenclosed hole");
    assigned[best].push_back(std::move(h));
  }
  std::vector<Domain> out;
  for (std::size_t o = 0; o < outers.size(); ++o) {
    std::string name = outers.size() > 1 ? label + "#" + std::to_string(o) : label;
    Domain d(std::move(outers[o]), std::move(assigned[o]), std::move(name), outers.size() == 1 ? cf : ClosedForm{});
    if (d.area() >= kMinComponentArea) out.push_back(std::move(d));
  }
  // Deterministic order: by leftmost point of the outer boundary.
  std::stable_sort(out.begin(), out.end(), [](const Domain& x, const Domain& y) {
    const Box bx = x.bounding_box();
    const Box by = y.bounding_box();
    return bx.xmin != by.xmin ? bx.xmin < by.xmin : bx.ymin < by.ymin;
  });
  return out;
}

}  // namespace

std::vector<Crossing> find_crossings(const ParamCurve& first, const ParamCurve& second) {
  const auto& p = first.polyline();
  const auto& q = second.polyline();
  constexpr std::size_t chunk = 32;
  const auto bp = chunk_boxes(p, chunk);
  const auto bq = chunk_boxes(q, chunk);
  double scale = 1.0;
  for (const Complex& z : p) scale = std::max(scale, std::abs(z));

  std::vector<Crossing> out;
  for (std::size_t c1 = 0; c1 < bp.size(); ++c1) {
    for (std::size_t c2 = 0; c2 < bq.size(); ++c2) {
      const EdgeBox& x = bp[c1];
      const EdgeBox& y = bq[c2];
      if (x.x1 < y.x0 || y.x1 < x.x0 || x.y1 < y.y0 || y.y1 < x.y0) continue;
      for (std::size_t i = c1 * chunk; i < std::min(p.size(), (c1 + 1) * chunk); ++i) {
        for (std::size_t j = c2 * chunk; j < std::min(q.size(), (c2 + 1) * chunk); ++j) {
          double sa = 0.0;
          double sb = 0.0;
          if (!edges_meet(p[i], p[(i + 1) % p.size()], q[j], q[(j + 1) % q.size()], sa, sb)) continue;
          double t = edge_param(first, i, sa);
          double s = edge_param(second, j, sb);
          bool converged = false;
          for (int it = 0; it < 60; ++it) {
            const PointJet ja = first.jet(t);
            const PointJet jb = second.jet(s);
            const Complex r = jb.z - ja.z;  // solve ja.d1 * dt - jb.d1 * ds = r
            const double det = cross(ja.d1, jb.d1);
            if (det == 0.0) break;
            const double dt = cross(r, jb.d1) / det;
            const double ds = cross(r, ja.d1) / det;
            t += dt;
            s += ds;
            if (std::abs(dt) + std::abs(ds) < 1e-15) {
              converged = true;
              break;
            }
            if (std::abs(r) < 1e-15 * scale) {
              converged = true;
              break;
            }
          }
          t = wrap01(t);
          s = wrap01(s);
          const Complex za = first.point(t);
          const Complex zb = second.point(s);
          if (!converged && std::abs(za - zb) > 1e-11 * scale) {
            throw GeometryError("curve crossing did not converge (near-tangential contact?)");
          }
          const Complex ta = first.jet(t).d1;
          const Complex tb = second.jet(s).d1;
          double angle = std::abs(std::arg(tb / ta));
          angle = std::min(angle, kPi - angle);
          if (angle < kMinCrossingAngle) throw GeometryError("tangential boundary contact");
          const Complex z = 0.5 * (za + zb);
          const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Crossing& c) {
            return std::abs(c.point - z) < 1e-8 * scale;
          });
          if (!duplicate) out.push_back({t, s, z, angle});
        }
      }
    }
  }
  return out;
}

std::vector<Domain> boolean_intersect(const Domain& a, const Domain& b) {
  auto loops = boolean_loops(a, b, Op::intersect);
  return assemble(std::move(loops), join_label(a, b, "&"), two_disc_form(a, b, Op::intersect));
}

Domain boolean_union(const Domain& a, const Domain& b) {
  auto loops = boolean_loops(a, b, Op::unite);
  auto parts = assemble(std::move(loops), join_label(a, b, "|"), two_disc_form(a, b, Op::unite));
  if (parts.size() != 1) throw GeometryError("union of the domains is disconnected");
  return std::move(parts.front());
}

}  // namespace carath::geometry
