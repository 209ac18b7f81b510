#include <cmath>
#include <random>

#include "doctest.h"

#include "carath/geometry/boolean.hpp"
#include "carath/geometry/grid.hpp"
#include "carath/geometry/mesh.hpp"
#include "carath/geometry/offset.hpp"
#include "carath/geometry/shapes.hpp"

using namespace carath;
using namespace carath::geometry;

namespace {

std::vector<Complex> circle_points(int n, double r = 1.0, Complex c = 0.0) {
  std::vector<Complex> p;
  for (int j = 0; j < n; ++j) p.push_back(c + std::polar(r, kTwoPi * j / n));
  return p;
}

Domain lens() {
  auto parts = boolean_intersect(Domain::disc(-0.5, 1.0, "L"), Domain::disc(0.5, 1.0, "R"));
  REQUIRE(parts.size() == 1);
  return parts[0];
}

Complex random_point(std::mt19937_64& rng, const Box& b) {
  std::uniform_real_distribution<double> ux(b.xmin, b.xmax);
  std::uniform_real_distribution<double> uy(b.ymin, b.ymax);
  return {ux(rng), uy(rng)};
}

}  // namespace

TEST_CASE("circle interpolation is exact off the samples") {
  const auto c = ParamCurve::from_samples(circle_points(64));
  for (int k = 0; k < 200; ++k) {
    const double t = (k + 0.37) / 200.0;
    CHECK(std::abs(std::abs(c.point(t)) - 1.0) < 1e-10);
  }
}

TEST_CASE("ellipse curvature at the vertex") {
  std::vector<Complex> p;
  for (int j = 0; j < 64; ++j) p.emplace_back(2.0 * std::cos(kTwoPi * j / 64), std::sin(kTwoPi * j / 64));
  const auto c = ParamCurve::from_samples(p);
  const CurveSample s = c.eval(0.0);
  CHECK(std::abs(s.point - Complex(2.0, 0.0)) < 1e-12);
  CHECK(s.curvature == doctest::Approx(2.0).epsilon(1e-6));
  // Analytic curvature ab / (a^2 sin^2 + b^2 cos^2)^{3/2} along the parameter.
  for (int k = 0; k < 20; ++k) {
    const double th = kTwoPi * (k + 0.25) / 20.0;
    const double st = std::sin(th);
    const double ct = std::cos(th);
    const double exact = 2.0 / std::pow(4.0 * st * st + ct * ct, 1.5);
    CHECK(std::abs(c.eval(th / kTwoPi).curvature - exact) < 1e-6);
  }
  const auto fine = ellipse_curve(0.0, 2.0, 1.0);
  CHECK(fine.eval(0.0).curvature == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("figure-eight sampling is rejected") {
  std::vector<Complex> p;
  for (int j = 0; j < 8; ++j) {
    const double th = kTwoPi * j / 8;
    p.emplace_back(std::sin(th), std::sin(th) * std::cos(th));
  }
  CHECK_THROWS_AS(ParamCurve::from_samples(p), GeometryError);
  CHECK_THROWS(ParamCurve::from_samples(circle_points(7)));
}

TEST_CASE("curve evaluation on circles") {
  const auto c = ParamCurve::circle(0.0, 1.0);
  const CurveSample s = c.eval(0.0);
  CHECK(std::abs(s.point - 1.0) < 1e-14);
  CHECK(std::abs(s.tangent - Complex(0, 1)) < 1e-14);
  CHECK(std::abs(s.normal - 1.0) < 1e-14);
  CHECK(s.curvature == doctest::Approx(1.0));
  const auto c2 = ParamCurve::circle(0.3, 2.0);
  for (double t : {0.1, 0.45, 0.9}) CHECK(c2.eval(t).curvature == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("containment and distance") {
  const auto disc = Domain::disc(0.0, 1.0);
  CHECK(disc.contains(0.0));
  CHECK_FALSE(disc.contains(2.0));
  CHECK_THROWS_AS(disc.contains(1.0), GeometryError);
  CHECK(disc.dist_to_boundary(0.3) == doctest::Approx(0.7).epsilon(1e-10));
  CHECK_THROWS_AS(disc.dist_to_boundary(1.5), GeometryError);

  const auto ann = Domain::annulus(0.0, 0.5, 1.0);
  CHECK_FALSE(ann.contains(0.0));
  CHECK(ann.contains(0.75));
  CHECK(ann.connectivity() == 2);
  CHECK(ann.dist_to_boundary(0.7) == doctest::Approx(0.2).epsilon(1e-10));

  const auto l = lens();
  CHECK(l.dist_to_boundary(0.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("lens intersection has corners at the circle crossings") {
  const auto l = lens();
  CHECK(l.has_corners());
  const auto& corners = l.outer().corner_params();
  REQUIRE(corners.size() == 2);
  const double y = std::sqrt(3.0) / 2.0;
  for (double t : corners) {
    const Complex z = l.outer().point(t);
    CHECK(std::abs(z.real()) < 1e-12);
    CHECK(std::abs(std::abs(z.imag()) - y) < 1e-12);
  }
  CHECK(std::holds_alternative<TwoDiscRegion>(l.closed_form()));
}

TEST_CASE("boolean edge cases") {
  CHECK(boolean_intersect(Domain::disc(-2.0, 1.0), Domain::disc(2.0, 1.0)).empty());
  CHECK_THROWS_AS(boolean_union(Domain::disc(-2.0, 1.0), Domain::disc(2.0, 1.0)), GeometryError);
  auto nested = boolean_intersect(Domain::disc(0.0, 0.5), Domain::disc(0.0, 1.0));
  REQUIRE(nested.size() == 1);
  CHECK(nested[0].area() == doctest::Approx(kPi * 0.25).epsilon(1e-10));
  CHECK(std::holds_alternative<DiscShape>(nested[0].closed_form()));
  const auto big = boolean_union(Domain::disc(0.0, 0.5), Domain::disc(0.0, 1.0));
  CHECK(big.area() == doctest::Approx(kPi).epsilon(1e-10));
  CHECK_THROWS_AS(boolean_intersect(Domain::disc(-1.0, 1.0), Domain::disc(1.0, 1.0)), GeometryError);
}

TEST_CASE("union of two discs has reflex corners") {
  const auto u = boolean_union(Domain::disc(-0.5, 1.0), Domain::disc(0.5, 1.0));
  CHECK(u.connectivity() == 1);
  const auto& turns = u.outer().corner_turns();
  REQUIRE(turns.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(turns[k] < 0.0);
    const Complex z = u.outer().point(u.outer().corner_params()[k]);
    CHECK(std::abs(std::abs(z.imag()) - std::sqrt(3.0) / 2.0) < 1e-12);
  }
  const double lens_area = 2.0 * (kPi / 3.0 - std::sqrt(3.0) / 4.0);
  CHECK(u.area() == doctest::Approx(2.0 * kPi - lens_area).epsilon(1e-9));
}

TEST_CASE("crescents whose union encloses a hole") {
  // Each crescent is a disc minus an off-center disc; the two holes overlap.
  const Domain c1(ParamCurve::circle(Complex(0.0, 0.05), 1.0), {ParamCurve::circle(Complex(0.0, 0.35), 0.55)}, "c1");
  const Domain c2(ParamCurve::circle(Complex(0.0, -0.05), 1.0), {ParamCurve::circle(Complex(0.0, -0.35), 0.55)}, "c2");
  const auto u = boolean_union(c1, c2);
  CHECK(u.connectivity() == 2);
  CHECK_FALSE(u.contains(0.0));
  CHECK(u.contains(Complex(0.0, 0.9)));
  CHECK(u.contains(Complex(0.0, -0.9)));
}

TEST_CASE("boolean results agree with membership on random points") {
  const Domain a = Domain::disc(-0.5, 1.0, "a");
  const Domain b(fourier_blob_curve(Complex(0.6, 0.1), 0.9, {{3, 0.15, 0.2}}), {}, "b");
  const auto inter = boolean_intersect(a, b);
  REQUIRE(inter.size() == 1);
  const auto uni = boolean_union(a, b);
  std::mt19937_64 rng(7);
  const Box box{-1.6, 1.7, -1.2, 1.2};
  int checked = 0;
  for (int k = 0; k < 10000; ++k) {
    const Complex z = random_point(rng, box);
    try {
      const bool ia = a.contains(z);
      const bool ib = b.contains(z);
      CHECK(inter[0].contains(z) == (ia && ib));
      CHECK(uni.contains(z) == (ia || ib));
      ++checked;
    } catch (const GeometryError&) {
    }
  }
  CHECK(checked > 9990);
}

TEST_CASE("thickening") {
  const auto d = thicken(Domain::disc(0.0, 1.0), 0.1);
  CHECK(d.area() == doctest::Approx(kPi * 1.21).epsilon(1e-10));
  CHECK(d.dist_to_boundary(0.0) == doctest::Approx(1.1).epsilon(1e-10));
  const auto* cf = std::get_if<DiscShape>(&d.closed_form());
  REQUIRE(cf != nullptr);
  CHECK(cf->radius == doctest::Approx(1.1));

  const auto an = thicken(Domain::annulus(0.0, 0.5, 1.0), 0.05);
  CHECK(an.dist_to_boundary(0.75) == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(std::abs(an.outer().point(0.0) - 1.05) < 1e-14);
  CHECK(std::abs(std::abs(an.holes()[0].point(0.3)) - 0.45) < 1e-12);

  const auto l = lens();
  const auto t1 = thicken(l, 0.02);
  const auto t2 = thicken(l, 0.01);
  CHECK(t1.connectivity() == 1);
  CHECK(t1.outer().is_smooth());
  std::mt19937_64 rng(3);
  const Box box = l.bounding_box();
  int n = 0;
  while (n < 100) {
    const Complex z = random_point(rng, box);
    if (!l.contains(z)) continue;
    CHECK(t1.contains(z));
    ++n;
  }
  int m = 0;
  const Box big{-0.6, 0.6, -1.0, 1.0};
  while (m < 500) {
    const Complex z = random_point(rng, big);
    try {
      if (!t2.contains(z)) continue;
      CHECK(t1.contains(z));
      ++m;
    } catch (const GeometryError&) {
    }
  }
  CHECK_THROWS_AS(thicken(Domain::annulus(0.0, 0.5, 1.0), 0.6), GeometryError);
}

TEST_CASE("thickened lens perimeter") {
  const double eps = 0.05;
  const auto t = thicken(lens(), eps);
  // Two arcs of angle 2 pi / 3 on radius 1 + eps plus two caps of angle pi / 3.
  const double expected = 2.0 * (2.0 * kPi / 3.0) * (1.0 + eps) + 2.0 * (kPi / 3.0) * eps;
  CHECK(t.perimeter() == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("boundary mesh weights") {
  const auto disc = Domain::disc(0.0, 1.0);
  const auto m8 = mesh_boundary(disc, 8, 1.0);
  for (double w : m8.weights) CHECK(w == doctest::Approx(kPi / 4.0).epsilon(1e-14));
  const auto m = mesh_boundary(disc, 256);
  CHECK(std::abs(m.total_weight() - kTwoPi) < 1e-12);
  for (const Complex& t : m.tangents) CHECK(std::abs(std::abs(t) - 1.0) < 1e-12);

  const auto l = lens();
  const auto ml = mesh_boundary(l, 128, 3.0);
  const double perimeter = 2.0 * (2.0 * kPi / 3.0);
  CHECK(std::abs(ml.total_weight() - perimeter) < 1e-6);
  const double arc = 2.0 * kPi / 3.0;
  for (double t : l.outer().corner_params()) {
    const Complex corner = l.outer().point(t);
    double nearest = 1e300;
    for (const Complex& z : ml.nodes) nearest = std::min(nearest, std::abs(z - corner));
    // First node sits at graded parameter g(1/128) = (1/128)^3 (1 + O(1/128)).
    const double s = 1.0 / 128.0;
    const double g = std::pow(s, 3) / (std::pow(s, 3) + std::pow(1.0 - s, 3));
    CHECK(nearest <= g * arc * (1.0 + 1e-9));
    CHECK(nearest <= 1.03 * std::pow(s, 3) * arc);
  }

  const auto ann = Domain::annulus(0.0, 0.5, 1.0);
  const auto ma = mesh_boundary(ann, 64);
  CHECK(ma.size() == 128);
  CHECK(std::abs(ma.total_weight() - 3.0 * kPi) < 1e-12);
  // Hole tangents run clockwise.
  CHECK(cross(ma.nodes[64], ma.tangents[64]) < 0.0);
  CHECK_THROWS_AS(mesh_boundary(disc, 9), std::invalid_argument);
  CHECK_THROWS_AS(mesh_boundary(disc, 32, 0.5), std::invalid_argument);
}

TEST_CASE("mesh weights converge spectrally on the ellipse") {
  // Angle-parametrized ellipse: the speed is not constant, so the trapezoid rule has work to do.
  std::vector<Complex> p;
  for (int j = 0; j < 64; ++j) p.emplace_back(2.0 * std::cos(kTwoPi * j / 64), std::sin(kTwoPi * j / 64));
  const Domain e(ParamCurve::from_samples(p), {}, "ellipse");
  // Perimeter 4 a E(e^2) from the arithmetic-geometric mean series.
  double a = 2.0;
  double b = 1.0;
  double pow2 = 0.5;
  double sum = pow2 * (a * a - b * b);
  for (int k = 0; k < 8; ++k) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    const double cn = 0.5 * (a - b);
    pow2 *= 2.0;
    sum += pow2 * cn * cn;
    a = an;
    b = bn;
  }
  const double perimeter = kTwoPi / a * (4.0 - sum);
  auto err = [&](int n) { return std::abs(mesh_boundary(e, n).total_weight() - perimeter); };
  CHECK(err(16) / err(32) > 100.0);
  CHECK(err(64) < 1e-12);
  CHECK(err(128) < 1e-12);
}

TEST_CASE("grid sampling") {
  const auto disc = Domain::disc(0.0, 1.0);
  const auto g = grid_sample(disc, 0.2, 0.5);
  CHECK(std::find(g.begin(), g.end(), Complex(0.0, 0.0)) != g.end());
  for (const Complex& z : g) CHECK(std::abs(z) <= 0.8 + 1e-12);
  const auto ga = grid_sample(Domain::annulus(0.0, 0.5, 1.0), 0.05, 0.1);
  for (const Complex& z : ga) CHECK(std::abs(z) >= 0.55 - 1e-12);
  const auto gl = grid_sample(lens(), 0.1, 0.05);
  CHECK_FALSE(gl.empty());
  for (const Complex& z : gl) {
    CHECK(std::abs(z + 0.5) < 1.0);
    CHECK(std::abs(z - 0.5) < 1.0);
  }
  CHECK_THROWS_AS(grid_sample(disc, 2.0, 0.1), GeometryError);
}
