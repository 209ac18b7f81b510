#include <cmath>
#include <random>

#include "doctest.h"

#include "carath/geometry/boolean.hpp"
#include "carath/harness/fixtures.hpp"
#include "carath/kernels/closed_form.hpp"
#include "carath/kernels/evaluator.hpp"

using namespace carath;
using namespace carath::kernels;
namespace fx = carath::harness::fixtures;

namespace {

std::shared_ptr<const BoundaryMesh> make_mesh(const Domain& d, int n) {
  return std::make_shared<const BoundaryMesh>(geometry::mesh_boundary(d, n));
}

// Image of the unit disc under F(w) = w + 0.2 w^2, univalent on the closed disc.
Domain cardioid_like() {
  std::vector<Complex> p;
  for (int j = 0; j < 64; ++j) {
    const Complex w = std::polar(1.0, kTwoPi * j / 64);
    p.push_back(w + 0.2 * w * w);
  }
  return Domain(geometry::ParamCurve::from_samples(p), {}, "image");
}

}  // namespace

TEST_CASE("disc Szegő kernel") {
  const auto mesh = make_mesh(fx::unit_disc(), 128);
  const auto s0 = solve_szego(mesh, 0.0);
  for (const Complex& s : s0.szego_boundary) CHECK(std::abs(s - 1.0 / kTwoPi) < 1e-12);
  CHECK(s0.diag_value == doctest::Approx(0.159155).epsilon(1e-6));
  const auto s1 = solve_szego(mesh, 0.5);
  CHECK(s1.diag_value == doctest::Approx(1.0 / (kTwoPi * 0.75)).epsilon(1e-12));
  for (std::size_t j = 0; j < mesh->size(); ++j) {
    const Complex exact = 1.0 / (kTwoPi * (1.0 - mesh->nodes[j] * 0.5));
    CHECK(std::abs(s1.szego_boundary[j] - exact) < 1e-12);
  }
}

TEST_CASE("Szegő boundary values on a conformal image of the disc") {
  // S(w, 0) = sqrt(g'(w)) / (2 pi) with g the inverse of F.
  const Domain d = cardioid_like();
  const auto mesh = make_mesh(d, 128);
  const auto sol = solve_szego(mesh, 0.0);
  for (int j = 0; j < 128; ++j) {
    const Complex e = std::polar(1.0, kTwoPi * j / 128);
    REQUIRE(std::abs(mesh->nodes[j] - (e + 0.2 * e * e)) < 1e-12);
    const Complex exact = 1.0 / (kTwoPi * std::sqrt(1.0 + 0.4 * e));
    CHECK(std::abs(sol.szego_boundary[j] - exact) < 1e-10);
  }
  // c_D(F(z)) = c_disc(z) / |F'(z)|
  const Complex z = 0.3;
  const double expected = 1.0 / (1.0 - 0.09) / 1.12;
  CHECK(caratheodory_szego(d, z + 0.2 * z * z, 128) == doctest::Approx(expected).epsilon(1e-10));
  const auto [f, df] = ahlfors_eval(sol, z + 0.2 * z * z);
  CHECK(std::abs(f - 0.3) < 1e-10);
  CHECK(std::abs(df - 1.0 / 1.12) < 1e-10);
}

TEST_CASE("ellipse Szegő diagonal is mesh converged") {
  const Domain e = fx::ellipse();
  const double c256 = caratheodory_szego(e, 0.0, 256);
  const double c512 = caratheodory_szego(e, 0.0, 512);
  CHECK(std::abs(c256 - c512) / c512 < 1e-8);
  const auto conv = caratheodory_converged(e, 0.0, 128, 1e-8);
  CHECK(conv.converged);
  CHECK(conv.value == doctest::Approx(c512).epsilon(1e-9));
}

TEST_CASE("Carathéodory metric on discs") {
  CHECK(caratheodory_szego(fx::unit_disc(), 0.0, 128) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(caratheodory_szego(fx::unit_disc(), 0.5, 128) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(caratheodory_szego(Domain::disc(0.0, 2.0), 0.0, 128) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(caratheodory_szego(fx::unit_disc(), 0.99, 128), GeometryError);
  CHECK_THROWS_AS(caratheodory_szego(fx::unit_disc(), 1.5, 128), GeometryError);
}

TEST_CASE("Garabedian kernel") {
  const auto mesh = make_mesh(fx::unit_disc(), 128);
  const auto l0 = garabedian_boundary(solve_szego(mesh, 0.0));
  for (std::size_t j = 0; j < mesh->size(); ++j) {
    CHECK(std::abs(l0[j] - 1.0 / (kTwoPi * mesh->nodes[j])) < 1e-12);
    CHECK(std::abs(l0[j]) == doctest::Approx(1.0 / kTwoPi));
  }
  const auto l5 = garabedian_boundary(solve_szego(mesh, 0.5));
  for (std::size_t j = 0; j < mesh->size(); ++j) {
    CHECK(std::abs(l5[j] - 1.0 / (kTwoPi * (mesh->nodes[j] - 0.5))) < 1e-8);
  }
  for (const Domain& d : {fx::ellipse(), fx::annulus(), fx::lens()}) {
    const auto sol = solve_szego(make_mesh(d, 256), d.connectivity() == 2 ? Complex(0.7) : Complex(0.1, 0.05));
    const auto l = garabedian_boundary(sol);
    for (std::size_t j = 0; j < l.size(); ++j) CHECK(std::abs(std::abs(l[j]) - std::abs(sol.szego_boundary[j])) < 1e-8);
  }
}

TEST_CASE("Ahlfors map") {
  const auto mesh = make_mesh(fx::unit_disc(), 128);
  const auto s0 = solve_szego(mesh, 0.0);
  auto [f, df] = ahlfors_eval(s0, 0.3);
  CHECK(std::abs(f - 0.3) < 1e-12);
  CHECK(std::abs(df - 1.0) < 1e-12);
  const auto s5 = solve_szego(mesh, 0.5);
  std::tie(f, df) = ahlfors_eval(s5, 0.0);
  CHECK(std::abs(f + 0.5) < 1e-12);
  CHECK(std::abs(df - 0.75) < 1e-12);
  std::tie(f, df) = ahlfors_eval(s5, 0.5);
  CHECK(f == Complex(0.0));
  CHECK(df.real() == doctest::Approx(4.0 / 3.0));

  const Domain lens = fx::lens();
  const auto lmesh = make_mesh(lens, 512);
  const auto sl = solve_szego(lmesh, 0.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-0.5, 0.5);
  std::uniform_real_distribution<double> uy(-0.87, 0.87);
  int n = 0;
  while (n < 1000) {
    const Complex z(ux(rng), uy(rng));
    if (!lens.contains(z) || lens.dist_to_boundary(z) <= 3.0 * lmesh->max_spacing) continue;
    CHECK(std::abs(ahlfors_eval(sl, z).first) < 1.0);
    ++n;
  }
  // Annulus: Ahlfors map is a two-sheeted cover, still bounded by 1.
  const auto sa = solve_szego(make_mesh(fx::annulus(), 256), 0.7);
  for (int k = 0; k < 50; ++k) {
    const Complex z = std::polar(0.75, kTwoPi * k / 50.0);
    CHECK(std::abs(ahlfors_eval(sa, z).first) < 1.0);
  }
}

TEST_CASE("Kerzman–Stein matrix and reproducing identity") {
  for (const Domain& d : {fx::ellipse(), fx::blob(), fx::annulus(), fx::one_hole_blob()}) {
    const auto mesh = make_mesh(d, 256);
    const Eigen::MatrixXcd b = KerzmanStein::weighted_matrix(*mesh);
    CHECK((b + b.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    const Complex a = d.connectivity() == 2 ? (d.label() == "annulus" ? Complex(0.7) : Complex(0.7, 0.1)) : Complex(0.1, 0.05);
    const auto sol = solve_szego(mesh, a);
    CHECK(std::abs(sol.diag_value - sol.diag_cauchy) <= 1e-8 * sol.diag_value);
    double sum = 0.0;
    for (std::size_t j = 0; j < mesh->size(); ++j) sum += std::norm(sol.szego_boundary[j]) * mesh->weights[j];
    CHECK(sum == doctest::Approx(sol.diag_value).epsilon(1e-12));
  }
}

TEST_CASE("disc metric closed form") {
  CHECK(disc_metric(0.0, 1.0, 0.0) == doctest::Approx(1.0));
  CHECK(disc_metric(0.0, 1.0, 0.5) == doctest::Approx(4.0 / 3.0));
  CHECK(disc_metric(1.0, 2.0, 1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(disc_metric(0.0, 1.0, 1.0), GeometryError);
}

TEST_CASE("two-disc regions") {
  const DiscShape l{-0.5, 1.0};
  const DiscShape r{0.5, 1.0};
  // Nearly coincident discs approach the disc density.
  double prev = 1.0;
  for (double off : {0.05, 0.01, 0.001}) {
    const double gap = std::abs(poincare_two_disc_regions({0.0, 1.0}, {off, 1.0}, RegionKind::union_, 0.0) - 1.0);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-3);
  // Cross-method: Szegő on the meshed boolean results (c = lambda when simply connected).
  for (const Complex z : {Complex(0.0), Complex(0.2, 0.3), Complex(-0.1, -0.5)}) {
    CHECK(caratheodory_szego(fx::lens(), z, 1024) ==
          doctest::Approx(poincare_two_disc_regions(l, r, RegionKind::intersection, z)).epsilon(1e-4));
  }
  for (const Complex z : {Complex(0.0), Complex(0.9, 0.3), Complex(-1.0, -0.2)}) {
    CHECK(caratheodory_szego(fx::two_disc_union(), z, 1024) ==
          doctest::Approx(poincare_two_disc_regions(l, r, RegionKind::union_, z)).epsilon(1e-4));
  }
  // Asymmetric pair through the evaluator.
  for (const auto& pair : fx::disc_pairs()) {
    if (pair.name != "asymmetric") continue;
    auto inter = std::make_shared<const Domain>(geometry::boolean_intersect(pair.first, pair.second).at(0));
    auto uni = std::make_shared<const Domain>(geometry::boolean_union(pair.first, pair.second));
    const auto ci = closed_form_evaluator(inter);
    const auto cu = closed_form_evaluator(uni);
    CHECK(ci.kind() == MetricKind::closed_form_sector_pullback);
    const Complex z(0.35, 0.1);
    CHECK(caratheodory_szego(*inter, z, 1024) == doctest::Approx(ci(z)).epsilon(1e-4));
    CHECK(caratheodory_szego(*uni, z, 1024) == doctest::Approx(cu(z)).epsilon(1e-4));
  }
  CHECK_THROWS_AS(poincare_two_disc_regions(l, r, RegionKind::intersection, 0.9), GeometryError);
  CHECK_THROWS_AS(poincare_two_disc_regions({0.0, 1.0}, {3.0, 1.0}, RegionKind::union_, 0.0), GeometryError);
}

TEST_CASE("annulus Poincaré density") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.0, kTwoPi);
  const double ref = poincare_annulus(0.5, 0.7);
  for (int k = 0; k < 100; ++k) CHECK(poincare_annulus(0.5, std::polar(0.7, th(rng))) == doctest::Approx(ref).epsilon(1e-14));
  // Along the radius, |z| lambda is smallest on the circle |z| = sqrt(r) and
  // lambda itself is smallest where tan(pi x / h) = pi / h, x = log(1/|z|).
  const double h = std::log(2.0);
  const double rho_lambda_min = std::exp(-(h / kPi) * std::atan(kPi / h));
  double best_rl = 1e300;
  double arg_rl = 0.0;
  double best_l = 1e300;
  double arg_l = 0.0;
  for (int k = 1; k < 20000; ++k) {
    const double rho = 0.5 + 0.5 * k / 20000.0;
    const double v = poincare_annulus(0.5, rho);
    if (rho * v < best_rl) {
      best_rl = rho * v;
      arg_rl = rho;
    }
    if (v < best_l) {
      best_l = v;
      arg_l = rho;
    }
  }
  CHECK(arg_rl == doctest::Approx(std::sqrt(0.5)).epsilon(1e-4));
  CHECK(arg_l == doctest::Approx(rho_lambda_min).epsilon(1e-4));
  // Punctured-disc limit.
  CHECK(poincare_annulus(1e-6, 0.5) == doctest::Approx(1.0 / (2.0 * 0.5 * std::log(2.0))).epsilon(0.01));
  CHECK(poincare_annulus({Complex(1.0, 1.0), 1.0, 2.0}, Complex(1.0, 2.4)) ==
        doctest::Approx(poincare_annulus(0.5, 0.7) / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(poincare_annulus(0.5, 0.3), GeometryError);
  // Carathéodory never exceeds Poincaré.
  CHECK(caratheodory_szego(fx::annulus(), 0.7, 256) < poincare_annulus(0.5, 0.7));
}

TEST_CASE("evaluators: monotonicity, bracketing, covariance") {
  auto disc = std::make_shared<const Domain>(fx::unit_disc());
  auto big = std::make_shared<const Domain>(Domain::disc(0.0, 1.1));
  auto ellipse = std::make_shared<const Domain>(fx::ellipse());
  auto lens = std::make_shared<const Domain>(fx::lens());
  const auto c_disc = closed_form_evaluator(disc);
  const auto s_disc = szego_evaluator(disc);
  const auto c_big = closed_form_evaluator(big);
  const auto s_ellipse = szego_evaluator(ellipse);
  const auto c_lens = closed_form_evaluator(lens);
  const auto s_lens = szego_evaluator(lens);
  for (const Complex z : {Complex(0.0), Complex(0.2, 0.3), Complex(-0.1, 0.6)}) {
    CHECK(c_big(z) <= s_disc(z) + 1e-6);
    CHECK(s_ellipse(z) <= c_disc(z) + 1e-6);
    CHECK(s_disc(z) <= s_lens(z) + 1e-6);
    CHECK(c_disc(z) <= c_lens(z) + 1e-6);
    CHECK(s_lens(z) == doctest::Approx(c_lens(z)).epsilon(1e-6));
  }
  CHECK(s_disc.cache_size() == 3);
  // Bracketing by inscribed and circumscribed discs.
  for (const Complex z : {Complex(0.0), Complex(1.0, 0.2), Complex(-1.5, 0.0), Complex(0.3, -0.7)}) {
    const double r_in = ellipse->dist_to_boundary(z);
    double r_out = 0.0;
    for (const Complex& w : ellipse->outer().polyline()) r_out = std::max(r_out, std::abs(w - z));
    r_out += ellipse->outer().polyline_sag();
    const double c = s_ellipse(z);
    CHECK(1.0 / r_out <= c);
    CHECK(c <= 1.0 / r_in);
  }
  // Affine covariance c_{sD+t}(s z + t) = c_D(z) / |s|.
  const geometry::ParamCurve base = fx::blob().outer();
  for (const Complex s : {Complex(0.5, 0.0), std::polar(2.0, 1.0)}) {
    const Complex t(0.3, -1.2);
    std::vector<Complex> pts;
    for (const Complex& p : base.segments()[0].carrier->samples()) pts.push_back(s * p + t);
    const Domain moved(geometry::ParamCurve::from_samples(pts), {}, "moved");
    const auto sm = szego_evaluator(std::make_shared<const Domain>(moved));
    const auto sb = szego_evaluator(std::make_shared<const Domain>(fx::blob()));
    for (const Complex z : {Complex(0.0), Complex(0.4, 0.1)}) {
      CHECK(sm(s * z + t) == doctest::Approx(sb(z) / std::abs(s)).epsilon(1e-6));
    }
  }
  CHECK(constant_evaluator(2.5)(Complex(7.0, 1.0)) == 2.5);
  CHECK_THROWS_AS(closed_form_evaluator(std::make_shared<const Domain>(fx::annulus())), std::invalid_argument);
  CHECK(poincare_evaluator(std::make_shared<const Domain>(fx::annulus())).kind() ==
        MetricKind::closed_form_annulus_poincare);
}

TEST_CASE("blow-up at a smooth boundary point") {
  const auto d = std::make_shared<const Domain>(fx::blob());
  const auto c = szego_evaluator(d, SzegoOptions{128, 2048, 3.0, 0});
  const auto& curve = d->outer();
  const geometry::CurveSample s = curve.eval(0.1);
  double prev = 1e300;
  double v = 0.0;
  for (double dist : {0.04, 0.02, 0.01}) {
    const Complex z = s.point - dist * s.normal;
    REQUIRE(d->dist_to_boundary(z) == doctest::Approx(dist).epsilon(1e-3));
    v = c(z) * dist;
    // Half-plane limit 1/2.
    CHECK(std::abs(v - 0.5) < prev);
    prev = std::abs(v - 0.5);
  }
  CHECK(v >= 0.4);
  CHECK(v <= 0.6);
}
