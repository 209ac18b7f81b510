#include <cmath>
#include <random>

#include "doctest.h"

#include "carath/extremal/extremal.hpp"
#include "carath/harness/fixtures.hpp"
#include "carath/kernels/closed_form.hpp"
#include "carath/kernels/szego.hpp"

using namespace carath;
using namespace carath::extremal;
namespace fx = carath::harness::fixtures;

namespace {

std::shared_ptr<const Domain> shared(Domain d) { return std::make_shared<const Domain>(std::move(d)); }

double certified(const std::shared_ptr<const Domain>& d, Complex a, const ExtremalParams& p) {
  return lp_caratheodory_lower(ExtremalProblem::make(d, a, p)).certified_value;
}

// Brute force over all vertices of {x : A x <= 1} in dimension 2 or 3.
double brute_force(const Eigen::MatrixXd& a, const Eigen::VectorXd& c) {
  const int n = static_cast<int>(a.rows());
  const int d = static_cast<int>(a.cols());
  double best = -1e300;
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      Eigen::MatrixXd b(d, d);
      for (int i = 0; i < d; ++i) b.row(i) = a.row(idx[i]);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
      if (!lu.isInvertible()) return;
      const Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(d));
      if (((a * x).array() <= 1.0 + 1e-9).all()) best = std::max(best, c.dot(x));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("active-set simplex matches vertex enumeration") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    const int n = 12 + trial % 7;
    Eigen::MatrixXd a(n, d);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) a(i, j) = g(rng);
    }
    // Bounded: include the cross-polytope rows.
    Eigen::MatrixXd box(2 * d, d);
    box.setZero();
    for (int j = 0; j < d; ++j) {
      box(2 * j, j) = 0.2;
      box(2 * j + 1, j) = -0.2;
    }
    Eigen::MatrixXd all(n + 2 * d, d);
    all << a, box;
    Eigen::VectorXd c(d);
    for (int j = 0; j < d; ++j) c[j] = g(rng);
    LpOptions opt;
    opt.perturbation = 0.0;
    const LpResult r = maximize(c, DenseConstraints(all), opt);
    CHECK(r.optimal);
    CHECK(r.value == doctest::Approx(brute_force(all, c)).epsilon(1e-9));
    CHECK(((all * r.x).array() <= 1.0 + 1e-12).all());
  }
}

TEST_CASE("degenerate LP terminates") {
  // Many constraints through the same vertex (1, 1).
  Eigen::MatrixXd a(40, 2);
  for (int i = 0; i < 40; ++i) {
    const double t = (i + 1) / 41.0;
    a(i, 0) = t;
    a(i, 1) = 1.0 - t;
  }
  const LpResult r = maximize(Eigen::Vector2d(1.0, 1.0), DenseConstraints(a));
  CHECK(r.optimal);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("unbounded LP is reported") {
  Eigen::MatrixXd a(1, 2);
  a << 1.0, 0.0;
  CHECK_THROWS_AS(maximize(Eigen::Vector2d(0.0, 1.0), DenseConstraints(a)), NumericalError);
}

TEST_CASE("pole placement") {
  CHECK(choose_poles(fx::unit_disc()).empty());
  const auto pa = choose_poles(fx::annulus());
  REQUIRE(pa.size() == 1);
  CHECK(std::abs(pa[0]) < 1e-12);
  const Domain two_holes(geometry::fourier_blob_curve(0.0, 1.5, {{2, 0.1, 0.0}}),
                         {geometry::ParamCurve::circle(Complex(-0.6, 0.0), 0.3),
                          geometry::fourier_blob_curve(Complex(0.6, 0.1), 0.3, {{3, 0.2, 0.0}})},
                         "two_holes");
  const auto p2 = choose_poles(two_holes);
  REQUIRE(p2.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(two_holes.holes()[i].winding_number(p2[i]) != 0);
    CHECK_FALSE(two_holes.contains(p2[i]));
  }
  // Non-convex hole whose centroid lies outside it: a thin crescent.
  const Domain crescent_hole(
      geometry::ParamCurve::circle(0.0, 2.0),
      {geometry::fourier_blob_curve(Complex(0.0, 0.0), 0.8, {{1, 0.0, 0.0}})}, "plain");
  CHECK(choose_poles(crescent_hole).size() == 1);
}

TEST_CASE("certified values on discs") {
  ExtremalParams p;
  p.degree = 5;
  p.samples_per_curve = 256;
  p.angle_count = 64;
  const auto c1 = lp_caratheodory_lower(ExtremalProblem::make(shared(fx::unit_disc()), 0.0, p));
  CHECK(c1.certified_value >= 0.995);
  CHECK(c1.certified_value <= 1.0);
  CHECK(c1.certified_value <= c1.raw_lp_value);
  CHECK(c1.certified_value == doctest::Approx(c1.raw_lp_value * std::cos(kPi / 64) / c1.sup_check));
  const double c2 = certified(shared(Domain::disc(0.0, 2.0)), 0.0, p);
  CHECK(c2 >= 0.4975);
  CHECK(c2 <= 0.5);
  CHECK_THROWS_AS(ExtremalProblem::make(shared(fx::unit_disc()), 0.0, ExtremalParams{24, 64, 64, 10, 8, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExtremalProblem::make(shared(fx::unit_disc()), 0.0, ExtremalParams{5, 256, 8, 10, 8, {}}),
                  std::invalid_argument);
}

TEST_CASE("annulus LP agrees with Szegő") {
  const auto ann = shared(fx::annulus());
  ExtremalParams p;
  p.degree = 20;
  const double lp = certified(ann, 0.7, p);
  const double sz = kernels::caratheodory_szego(*ann, 0.7, 256);
  CHECK(lp <= sz + 1e-6);
  CHECK(lp >= 0.99 * sz);
}

TEST_CASE("metric field on the disc and two-disc pieces") {
  const auto disc = shared(fx::unit_disc());
  std::vector<Complex> grid;
  for (int k = 0; k < 5; ++k) grid.emplace_back(0.2 * k, 0.0);
  const auto field = lp_metric_field(disc, grid);
  REQUIRE(field.size() == 5);
  for (const auto& v : field) {
    REQUIRE(v.ok);
    const double exact = 1.0 / (1.0 - std::norm(v.point));
    CHECK(v.value <= exact);
    CHECK(v.value >= 0.99 * exact);
  }
  const auto bad = lp_metric_field(disc, {Complex(2.0, 0.0)});
  CHECK_FALSE(bad[0].ok);
  CHECK_FALSE(bad[0].error.empty());

  const auto lens = shared(fx::lens());
  std::vector<Complex> lens_pts;
  for (int k = 0; k < 10; ++k) lens_pts.push_back(std::polar(0.04 * k, 0.7 * k));
  for (const auto& v : lp_metric_field(lens, lens_pts)) {
    REQUIRE(v.ok);
    CHECK(v.value >= kernels::disc_metric(0.0, std::sqrt(3.0) / 2.0, v.point));
  }

  const auto uni = shared(fx::two_disc_union());
  std::vector<Complex> toward_corner;
  for (double y : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.55, 0.6, 0.65, 0.7}) toward_corner.emplace_back(0.0, y);
  double prev = 0.0;
  for (const auto& v : lp_metric_field(uni, toward_corner)) {
    REQUIRE(v.ok);
    CHECK(v.value > prev);
    prev = v.value;
  }
}

TEST_CASE("LP lower bound on smooth fixtures and degree monotonicity") {
  for (const Domain& d : {fx::ellipse(), fx::blob()}) {
    const auto sd = shared(d);
    for (const Complex z : {Complex(0.0), Complex(0.3, 0.2)}) {
      const double lp = certified(sd, z, {});
      const double sz = kernels::caratheodory_szego(d, z, 512);
      CHECK(lp <= sz + 1e-6);
      CHECK(lp >= 0.99 * sz);
    }
  }
  for (const Domain& d : {fx::unit_disc(), fx::annulus()}) {
    const auto sd = shared(d);
    const Complex z = d.connectivity() == 1 ? Complex(0.4, 0.2) : Complex(0.7, 0.1);
    double prev_raw = 0.0;
    double prev_cert = 0.0;
    for (int n : {3, 6, 12, 24}) {
      ExtremalParams p;
      p.degree = n;
      const auto c = lp_caratheodory_lower(ExtremalProblem::make(sd, z, p));
      CHECK(c.raw_lp_value >= prev_raw - 1e-9);
      CHECK(c.certified_value >= prev_cert - 1e-6);
      prev_raw = c.raw_lp_value;
      prev_cert = c.certified_value;
    }
  }
}

TEST_CASE("LP monotonicity across nested domains") {
  const auto small = shared(fx::lens());
  const auto mid = shared(fx::unit_disc());
  const auto big = shared(fx::ellipse());
  for (const Complex z : {Complex(0.0), Complex(0.1, 0.3), Complex(-0.2, -0.4)}) {
    const double cs = certified(small, z, {});
    const double cm = certified(mid, z, {});
    const double cb = certified(big, z, {});
    CHECK(cm <= cs + 1e-6);
    CHECK(cb <= cm + 1e-6);
  }
}
