#pragma once

#include <memory>
#include <span>
#include <vector>

#include "carath/common.hpp"

namespace carath::geometry {

/// Value and first three derivatives of a carrier curve.
struct Jet {
  Complex z;
  Complex d1;
  Complex d2;
  Complex d3;
};

/// Value and first two derivatives of a (possibly displaced) curve piece.
struct PointJet {
  Complex z;
  Complex d1;
  Complex d2;
};

/// Periodic trigonometric interpolant s -> z(s), s in [0, 1), through
/// equispaced samples z(j/N) = samples[j].
class TrigCurve {
 public:
  explicit TrigCurve(std::vector<Complex> samples);

  /// Circle of the given radius, counterclockwise, starting at center + radius.
  static std::shared_ptr<const TrigCurve> circle(Complex center, double radius);

  Jet jet(double s) const;
  Complex operator()(double s) const;

  const std::vector<Complex>& samples() const { return samples_; }
  int max_mode() const { return max_mode_; }

 private:
  std::vector<Complex> samples_;
  // Fourier coefficients for modes -max_mode_..max_mode_, index k + max_mode_.
  std::vector<Complex> coeffs_;
  int max_mode_ = 0;
};

/// A piece of a carrier curve: s runs linearly from s0 to s1 (s1 < s0 walks the
/// carrier backwards), and the point is displaced by `offset` along the
/// right-hand normal of the direction of travel.
struct Segment {
  std::shared_ptr<const TrigCurve> carrier;
  double s0 = 0.0;
  double s1 = 1.0;
  double offset = 0.0;

  /// Position and derivatives with respect to the local parameter u in [0, 1].
  PointJet jet(double u) const;
  Complex point(double u) const;
  /// Signed curvature (relative to the direction of travel) of the
  /// undisplaced carrier at local parameter u.
  double base_curvature(double u) const;
  Segment reversed() const { return Segment{carrier, s1, s0, -offset}; }
  /// Sub-piece for local parameters [u0, u1].
  Segment sub(double u0, double u1) const;
};

/// Evaluation of a curve at a regular parameter.
struct CurveSample {
  Complex point;
  Complex tangent;  ///< unit, direction of travel
  Complex normal;   ///< unit, right-hand side of travel (outward for ccw curves)
  double curvature; ///< signed, positive when turning left
};

/// Closed Jordan curve t in [0, 1) made of one or more segments. Segment i
/// occupies [breaks[i], breaks[i+1]) with lengths proportional to arclength.
class ParamCurve {
 public:
  explicit ParamCurve(std::vector<Segment> segments, bool check_simple = true);

  /// Trigonometric interpolant through `points` (at least `min_samples`
  /// distinct points in traversal order).
  static ParamCurve from_samples(std::span<const Complex> points, int min_samples = 8);
  static ParamCurve circle(Complex center, double radius);

  /// Full evaluation; throws GeometryError at a corner parameter.
  CurveSample eval(double t) const;
  Complex point(double t) const;
  /// Position and derivatives with respect to t (one-sided from the right at breaks).
  PointJet jet(double t) const;

  const std::vector<Segment>& segments() const { return segments_; }
  /// Start parameter of every segment followed by the closing value 1.
  const std::vector<double>& breaks() const { return breaks_; }
  /// Breaks at which the tangent direction jumps.
  const std::vector<double>& corner_params() const { return corners_; }
  /// Turning angle at each corner in corner_params() (positive = left turn).
  const std::vector<double>& corner_turns() const { return corner_turns_; }
  bool is_smooth() const { return corners_.empty(); }

  double length() const { return length_; }
  double signed_area() const { return signed_area_; }
  double segment_length(std::size_t i) const { return segment_lengths_[i]; }

  ParamCurve reversed() const;
  /// Segments covering the forward parameter range [ta, tb]; tb may exceed
  /// ta by up to one full period.
  std::vector<Segment> subarc(double ta, double tb) const;

  /// Index of the segment containing t and the local parameter in it.
  std::size_t locate(double t, double& u) const;

  /// Dense polyline through the curve, closing vertex not repeated.
  const std::vector<Complex>& polyline() const { return poly_; }
  const std::vector<double>& polyline_params() const { return poly_t_; }
  /// Upper bound on the distance between the polyline and the curve.
  double polyline_sag() const { return sag_; }

  /// Closest point search: returns parameter and distance.
  double closest_param(Complex z, double* distance = nullptr) const;
  /// Winding number of the curve around z (computed on the polyline).
  int winding_number(Complex z) const;
  /// Whether the polyline has a self-intersection.
  bool self_intersects() const;

 private:
  void build();

  std::vector<Segment> segments_;
  std::vector<double> segment_lengths_;
  std::vector<double> breaks_;
  std::vector<double> corners_;
  std::vector<double> corner_turns_;
  double length_ = 0.0;
  double signed_area_ = 0.0;
  std::vector<Complex> poly_;
  std::vector<double> poly_t_;
  double sag_ = 0.0;
};

/// Curvature of a planar curve from its first two derivatives.
inline double curvature_of(Complex d1, Complex d2) {
  const double speed = std::abs(d1);
  return cross(d1, d2) / (speed * speed * speed);
}

/// Wraps t into [0, 1).
double wrap01(double t);

}  // namespace carath::geometry
