#include "carath/geometry/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "carath/geometry/quadrature.hpp"

namespace carath::geometry {

namespace {

constexpr double kCornerAngle = 1e-8;
constexpr double kCornerParamTol = 1e-12;

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

// Carrier curvature (in the carrier's own orientation) and its derivative in s.
std::pair<double, double> curvature_and_rate(const Jet& j) {
  const double speed = std::abs(j.d1);
  const double num = cross(j.d1, j.d2);
  const double den = speed * speed * speed;
  const double dnum = cross(j.d1, j.d3);
  const double dden = 3.0 * speed * dot(j.d1, j.d2);
  return {num / den, (dnum * den - num * dden) / (den * den)};
}

bool segments_cross(Complex a, Complex b, Complex c, Complex d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace

double wrap01(double t) {
  double w = t - std::floor(t);
  if (w >= 1.0) w = 0.0;
  return w;
}

// ---------------------------------------------------------------------------
// TrigCurve

TrigCurve::TrigCurve(std::vector<Complex> samples) : samples_(std::move(samples)) {
  const int n = static_cast<int>(samples_.size());
  if (n < 3) throw GeometryError("trigonometric curve needs at least 3 samples");
  std::vector<Complex> twiddle(n);
  for (int m = 0; m < n; ++m) twiddle[m] = std::polar(1.0, -kTwoPi * m / n);

  const int half = n / 2;
  const bool even = (n % 2 == 0);
  max_mode_ = half;
  coeffs_.assign(2 * max_mode_ + 1, Complex{});
  double scale = 0.0;
  for (int k = -half; k <= half; ++k) {
    const int kk = ((k % n) + n) % n;
    Complex c{};
    for (int j = 0; j < n; ++j) c += samples_[j] * twiddle[(static_cast<long>(kk) * j) % n];
    c /= static_cast<double>(n);
    if (even && (k == half || k == -half)) c *= 0.5;  // split the Nyquist mode
    coeffs_[k + max_mode_] = c;
    scale = std::max(scale, std::abs(c));
  }

  // Drop modes that are numerically zero on both sides.
  int keep = max_mode_;
  while (keep > 1 && std::abs(coeffs_[max_mode_ + keep]) <= 1e-16 * scale &&
         std::abs(coeffs_[max_mode_ - keep]) <= 1e-16 * scale) {
    --keep;
  }
  if (keep < max_mode_) {
    std::vector<Complex> trimmed(coeffs_.begin() + (max_mode_ - keep),
                                 coeffs_.begin() + (max_mode_ + keep + 1));
    coeffs_ = std::move(trimmed);
    max_mode_ = keep;
  }
}

std::shared_ptr<const TrigCurve> TrigCurve::circle(Complex center, double radius) {
  if (!(radius > 0.0)) throw GeometryError("circle radius must be positive");
  std::vector<Complex> pts(8);
  for (int j = 0; j < 8; ++j) pts[j] = center + std::polar(radius, kTwoPi * j / 8.0);
  return std::make_shared<const TrigCurve>(std::move(pts));
}

Jet TrigCurve::jet(double s) const {
  const Complex step = std::polar(1.0, kTwoPi * s);
  Complex e = std::polar(1.0, -kTwoPi * max_mode_ * s);
  Jet out{};
  for (int k = -max_mode_; k <= max_mode_; ++k) {
    const Complex c = coeffs_[k + max_mode_] * e;
    const Complex ik(0.0, kTwoPi * k);
    const Complex c1 = ik * c;
    const Complex c2 = ik * c1;
    out.z += c;
    out.d1 += c1;
    out.d2 += c2;
    out.d3 += ik * c2;
    e *= step;
  }
  return out;
}

Complex TrigCurve::operator()(double s) const {
  const Complex step = std::polar(1.0, kTwoPi * s);
  Complex e = std::polar(1.0, -kTwoPi * max_mode_ * s);
  Complex z{};
  for (int k = -max_mode_; k <= max_mode_; ++k) {
    z += coeffs_[k + max_mode_] * e;
    e *= step;
  }
  return z;
}

// ---------------------------------------------------------------------------
// Segment

PointJet Segment::jet(double u) const {
  const double ds = s1 - s0;
  const double s = s0 + ds * u;
  const Jet j = carrier->jet(s);
  if (offset == 0.0) return {j.z, ds * j.d1, ds * ds * j.d2};
  const double dir = sign_of(ds);
  const auto [kappa, dkappa] = curvature_and_rate(j);
  const Complex tangent = j.d1 / std::abs(j.d1);
  const Complex normal = Complex(0.0, -dir) * tangent;
  const double stretch = 1.0 + offset * dir * kappa;
  const Complex w = j.z + offset * normal;
  const Complex w1 = j.d1 * stretch;
  const Complex w2 = j.d2 * stretch + j.d1 * (offset * dir * dkappa);
  return {w, ds * w1, ds * ds * w2};
}

Complex Segment::point(double u) const {
  if (offset == 0.0) return (*carrier)(s0 + (s1 - s0) * u);
  return jet(u).z;
}

double Segment::base_curvature(double u) const {
  const double ds = s1 - s0;
  const Jet j = carrier->jet(s0 + ds * u);
  return sign_of(ds) * curvature_of(j.d1, j.d2);
}

Segment Segment::sub(double u0, double u1) const {
  const double ds = s1 - s0;
  return Segment{carrier, s0 + ds * u0, s0 + ds * u1, offset};
}

// ---------------------------------------------------------------------------
// ParamCurve

ParamCurve::ParamCurve(std::vector<Segment> segments, bool check_simple)
    : segments_(std::move(segments)) {
  if (segments_.empty()) throw GeometryError("curve needs at least one segment");
  build();
  if (check_simple && self_intersects()) throw GeometryError("curve is self-intersecting");
}

ParamCurve ParamCurve::from_samples(std::span<const Complex> points, int min_samples) {
  const std::size_t n = points.size();
  if (n < static_cast<std::size_t>(std::max(8, min_samples))) {
    throw GeometryError("too few sample points for a curve");
  }
  double scale = 0.0;
  for (const Complex& p : points) scale = std::max(scale, std::abs(p - points[0]));
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(points[j] - points[(j + 1) % n]) <= 1e-14 * std::max(scale, 1.0)) {
      throw GeometryError("repeated consecutive sample points");
    }
  }
  auto carrier = std::make_shared<const TrigCurve>(std::vector<Complex>(points.begin(), points.end()));
  return ParamCurve({Segment{carrier, 0.0, 1.0, 0.0}}, true);
}

ParamCurve ParamCurve::circle(Complex center, double radius) {
  return ParamCurve({Segment{TrigCurve::circle(center, radius), 0.0, 1.0, 0.0}}, false);
}

void ParamCurve::build() {
  const std::size_t ns = segments_.size();
  segment_lengths_.assign(ns, 0.0);
  double area2 = 0.0;
  for (std::size_t i = 0; i < ns; ++i) {
    const Segment& seg = segments_[i];
    const double span = std::abs(seg.s1 - seg.s0);
    const int panels = std::max(8, static_cast<int>(std::ceil(0.75 * seg.carrier->max_mode() * span)) + 8);
    segment_lengths_[i] = gauss_legendre([&](double u) { return std::abs(seg.jet(u).d1); }, 0.0, 1.0, panels);
    area2 += gauss_legendre(
        [&](double u) {
          const PointJet j = seg.jet(u);
          return cross(j.z, j.d1);
        },
        0.0, 1.0, panels);
    if (!(segment_lengths_[i] > 0.0)) throw GeometryError("degenerate curve segment");
  }
  length_ = 0.0;
  for (double l : segment_lengths_) length_ += l;
  signed_area_ = 0.5 * area2;

  breaks_.assign(ns + 1, 0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < ns; ++i) {
    breaks_[i] = acc / length_;
    acc += segment_lengths_[i];
  }
  breaks_[ns] = 1.0;

  // Closure and corners.
  corners_.clear();
  corner_turns_.clear();
  const bool periodic_single = (ns == 1 && std::abs(std::abs(segments_[0].s1 - segments_[0].s0) - 1.0) < 1e-14);
  if (!periodic_single) {
    for (std::size_t i = 0; i < ns; ++i) {
      const Segment& prev = segments_[(i + ns - 1) % ns];
      const Segment& cur = segments_[i];
      const PointJet a = prev.jet(1.0);
      const PointJet b = cur.jet(0.0);
      if (std::abs(a.z - b.z) > 1e-9 * std::max(1.0, length_)) {
        throw GeometryError("curve segments do not close up");
      }
      const double turn = std::arg(b.d1 / a.d1);
      if (std::abs(turn) > kCornerAngle) {
        corners_.push_back(breaks_[i]);
        corner_turns_.push_back(turn);
      }
    }
  }

  // Dense polyline.
  poly_.clear();
  poly_t_.clear();
  int modes = 0;
  for (const Segment& s : segments_) modes = std::max(modes, s.carrier->max_mode());
  const double total_pts = std::max(1024.0, 8.0 * modes);
  for (std::size_t i = 0; i < ns; ++i) {
    const int m = std::max(16, static_cast<int>(std::ceil(total_pts * segment_lengths_[i] / length_)));
    for (int k = 0; k < m; ++k) {
      const double u = static_cast<double>(k) / m;
      poly_.push_back(segments_[i].point(u));
      poly_t_.push_back(breaks_[i] + u * (breaks_[i + 1] - breaks_[i]));
    }
  }
  sag_ = 0.0;
  const std::size_t np = poly_.size();
  for (std::size_t k = 0; k < np; ++k) {
    const double ta = poly_t_[k];
    const double tb = (k + 1 < np) ? poly_t_[k + 1] : 1.0;
    const Complex mid = point(0.5 * (ta + tb));
    const Complex chord_mid = 0.5 * (poly_[k] + poly_[(k + 1) % np]);
    sag_ = std::max(sag_, std::abs(mid - chord_mid));
  }
  sag_ = 2.0 * sag_ + 1e-14 * std::max(1.0, length_);
}

std::size_t ParamCurve::locate(double t, double& u) const {
  const double w = wrap01(t);
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), w);
  std::size_t i = static_cast<std::size_t>(std::distance(breaks_.begin(), it));
  i = (i == 0) ? 0 : i - 1;
  if (i >= segments_.size()) i = segments_.size() - 1;
  u = (w - breaks_[i]) / (breaks_[i + 1] - breaks_[i]);
  u = std::clamp(u, 0.0, 1.0);
  return i;
}

Complex ParamCurve::point(double t) const {
  double u = 0.0;
  const std::size_t i = locate(t, u);
  return segments_[i].point(u);
}

PointJet ParamCurve::jet(double t) const {
  double u = 0.0;
  const std::size_t i = locate(t, u);
  const double h = breaks_[i + 1] - breaks_[i];
  PointJet j = segments_[i].jet(u);
  j.d1 /= h;
  j.d2 /= h * h;
  return j;
}

CurveSample ParamCurve::eval(double t) const {
  const double w = wrap01(t);
  for (double c : corners_) {
    double d = std::abs(w - c);
    d = std::min(d, 1.0 - d);
    if (d < kCornerParamTol) throw GeometryError("curve evaluated at a corner parameter");
  }
  const PointJet j = jet(w);
  const Complex tangent = j.d1 / std::abs(j.d1);
  return {j.z, tangent, Complex(0.0, -1.0) * tangent, curvature_of(j.d1, j.d2)};
}

ParamCurve ParamCurve::reversed() const {
  std::vector<Segment> segs;
  segs.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) segs.push_back(it->reversed());
  return ParamCurve(std::move(segs), false);
}

std::vector<Segment> ParamCurve::subarc(double ta, double tb) const {
  std::vector<Segment> out;
  if (tb < ta) tb += 1.0;
  double t = ta;
  int guard = 0;
  while (tb - t > 1e-15 && guard++ < static_cast<int>(4 * segments_.size() + 8)) {
    double u0 = 0.0;
    const std::size_t i = locate(t, u0);
    const double period = t - wrap01(t);
    const double seg_end = period + breaks_[i + 1];
    const double stop = std::min(tb, seg_end);
    const double h = breaks_[i + 1] - breaks_[i];
    const double u1 = std::clamp((stop - period - breaks_[i]) / h, 0.0, 1.0);
    if (u1 - u0 > 1e-13) out.push_back(segments_[i].sub(u0, u1));
    t = (stop >= seg_end) ? seg_end : stop;
    if (stop >= tb) break;
  }
  return out;
}

double ParamCurve::closest_param(Complex z, double* distance) const {
  const std::size_t np = poly_.size();
  // Candidate polyline edges.
  std::vector<std::pair<double, double>> cand;  // (distance, parameter)
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> edge_dist(np);
  std::vector<double> edge_t(np);
  for (std::size_t k = 0; k < np; ++k) {
    const Complex a = poly_[k];
    const Complex b = poly_[(k + 1) % np];
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double s = len2 > 0.0 ? dot(z - a, ab) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    const double d = std::abs(z - (a + s * ab));
    const double ta = poly_t_[k];
    const double tb = (k + 1 < np) ? poly_t_[k + 1] : 1.0;
    edge_dist[k] = d;
    edge_t[k] = ta + s * (tb - ta);
    best = std::min(best, d);
  }
  for (std::size_t k = 0; k < np; ++k) {
    if (edge_dist[k] <= best + 2.0 * sag_) cand.emplace_back(edge_dist[k], edge_t[k]);
  }
  std::sort(cand.begin(), cand.end());
  if (cand.size() > 8) cand.resize(8);

  double best_t = cand.front().second;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& [d0, t0] : cand) {
    double u = 0.0;
    const std::size_t i = locate(t0, u);
    const Segment& seg = segments_[i];
    for (int it = 0; it < 50; ++it) {
      const PointJet j = seg.jet(u);
      const Complex r = j.z - z;
      const double g1 = dot(r, j.d1);
      const double g2 = std::norm(j.d1) + dot(r, j.d2);
      double step = (g2 > 0.0) ? -g1 / g2 : -g1 / std::max(std::norm(j.d1), 1e-300);
      const double unew = std::clamp(u + step, 0.0, 1.0);
      if (std::abs(unew - u) < 1e-15) {
        u = unew;
        break;
      }
      u = unew;
    }
    const double d = std::abs(seg.point(u) - z);
    if (d < best_d) {
      best_d = d;
      best_t = breaks_[i] + u * (breaks_[i + 1] - breaks_[i]);
    }
  }
  if (distance != nullptr) *distance = best_d;
  return wrap01(best_t);
}

int ParamCurve::winding_number(Complex z) const {
  int wn = 0;
  const std::size_t np = poly_.size();
  for (std::size_t k = 0; k < np; ++k) {
    const Complex a = poly_[k];
    const Complex b = poly_[(k + 1) % np];
    if (a.imag() <= z.imag()) {
      if (b.imag() > z.imag() && cross(b - a, z - a) > 0.0) ++wn;
    } else {
      if (b.imag() <= z.imag() && cross(b - a, z - a) < 0.0) --wn;
    }
  }
  return wn;
}

bool ParamCurve::self_intersects() const {
  const std::size_t np = poly_.size();
  constexpr std::size_t chunk = 32;
  const std::size_t nc = (np + chunk - 1) / chunk;
  struct Box {
    double x0, x1, y0, y1;
  };
  std::vector<Box> boxes(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    Box b{1e300, -1e300, 1e300, -1e300};
    for (std::size_t k = c * chunk; k < std::min(np, (c + 1) * chunk) + 1; ++k) {
      const Complex p = poly_[k % np];
      b.x0 = std::min(b.x0, p.real());
      b.x1 = std::max(b.x1, p.real());
      b.y0 = std::min(b.y0, p.imag());
      b.y1 = std::max(b.y1, p.imag());
    }
    boxes[c] = b;
  }
  for (std::size_t c1 = 0; c1 < nc; ++c1) {
    for (std::size_t c2 = c1; c2 < nc; ++c2) {
      const Box& a = boxes[c1];
      const Box& b = boxes[c2];
      if (a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0) continue;
      for (std::size_t i = c1 * chunk; i < std::min(np, (c1 + 1) * chunk); ++i) {
        const std::size_t j0 = (c1 == c2) ? i + 2 : c2 * chunk;
        for (std::size_t j = j0; j < std::min(np, (c2 + 1) * chunk); ++j) {
          if (i == 0 && j == np - 1) continue;  // adjacent through the closing edge
          if (segments_cross(poly_[i], poly_[(i + 1) % np], poly_[j], poly_[(j + 1) % np])) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace carath::geometry
