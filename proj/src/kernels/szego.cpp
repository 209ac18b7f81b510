#include "carath/kernels/szego.hpp"

#include <cmath>
#include <stdexcept>

namespace carath::kernels {

namespace {

// 1 / (2 pi i)
const Complex kInvTwoPiI = Complex(0.0, -1.0 / kTwoPi);

void check_interior(const BoundaryMesh& mesh, Complex z, double factor) {
  const Domain& d = *mesh.owner;
  if (!d.contains(z)) throw GeometryError("point is outside the domain");
  if (d.dist_to_boundary(z) <= factor * mesh.max_spacing) {
    throw GeometryError("point is too close to the boundary for the mesh resolution");
  }
}

// Cauchy integral (1 / 2 pi i) \int g(w) dw / (w - z) and its z-derivative.
std::pair<Complex, Complex> cauchy(const BoundaryMesh& mesh, const std::vector<Complex>& g, Complex z) {
  Complex v = 0.0;
  Complex dv = 0.0;
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    const Complex r = 1.0 / (mesh.nodes[j] - z);
    const Complex q = g[j] * mesh.tangents[j] * mesh.weights[j] * r;
    v += q;
    dv += q * r;
  }
  return {kInvTwoPiI * v, kInvTwoPiI * dv};
}

}  // namespace

Eigen::MatrixXcd KerzmanStein::weighted_matrix(const BoundaryMesh& mesh) {
  const auto n = static_cast<Eigen::Index>(mesh.size());
  Eigen::MatrixXcd b(n, n);
  std::vector<double> sw(mesh.size());
  for (std::size_t j = 0; j < mesh.size(); ++j) sw[j] = std::sqrt(mesh.weights[j]);
  for (Eigen::Index j = 0; j < n; ++j) {
    b(j, j) = 0.0;
    const Complex zj = mesh.nodes[j];
    const Complex tj = std::conj(mesh.tangents[j]);
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const Complex d = zj - mesh.nodes[k];
      // A(z, w) = -(1 / 2 pi i) [conj(T(z)) / conj(z - w) + T(w) / (w - z)]
      const Complex a = kInvTwoPiI * (mesh.tangents[k] / d - tj / std::conj(d));
      b(j, k) = sw[j] * sw[k] * a;
      b(k, j) = -std::conj(b(j, k));
    }
  }
  return b;
}

KerzmanStein::KerzmanStein(std::shared_ptr<const BoundaryMesh> mesh) : mesh_(std::move(mesh)) {
  if (!mesh_ || !mesh_->owner) throw std::invalid_argument("mesh without owner domain");
  factors_ = weighted_matrix(*mesh_);
  factors_.diagonal().array() += 1.0;
  lu_.compute(factors_);
  factors_.resize(0, 0);
  // I + B with B skew-hermitian has all eigenvalues on 1 + iR.
  const double rcond = lu_.rcond();
  if (!(rcond > 1e-14)) throw NumericalError("Kerzman–Stein system is singular to working precision");
}

KernelSolution KerzmanStein::solve(Complex a, double min_distance_factor) const {
  const BoundaryMesh& m = *mesh_;
  check_interior(m, a, min_distance_factor);
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    // conj of (1 / 2 pi i) T(w) / (w - a)
    const Complex h = kInvTwoPiI * m.tangents[j] / (m.nodes[j] - a);
    rhs(j) = std::sqrt(m.weights[j]) * std::conj(h);
  }
  const Eigen::VectorXcd x = lu_.solve(rhs);
  if (!x.allFinite()) throw NumericalError("Kerzman–Stein solve produced non-finite values");

  KernelSolution sol;
  sol.base_point = a;
  sol.mesh = mesh_;
  sol.szego_boundary.resize(m.size());
  for (Eigen::Index j = 0; j < n; ++j) sol.szego_boundary[j] = x(j) / std::sqrt(m.weights[j]);
  sol.diag_value = x.squaredNorm();
  sol.diag_cauchy = cauchy(m, sol.szego_boundary, a).first.real();
  if (!(sol.diag_value > 0.0)) throw NumericalError("non-positive Szegő diagonal");
  return sol;
}

KernelSolution solve_szego(std::shared_ptr<const BoundaryMesh> mesh, Complex a) {
  return KerzmanStein(std::move(mesh)).solve(a);
}

KernelSolution solve_szego(const BoundaryMesh& mesh, Complex a) {
  return solve_szego(std::make_shared<const BoundaryMesh>(mesh), a);
}

double caratheodory_szego(const Domain& domain, Complex a, int n) {
  auto mesh = std::make_shared<const BoundaryMesh>(geometry::mesh_boundary(domain, n));
  return solve_szego(mesh, a).caratheodory();
}

int szego_resolution(const Domain& domain, Complex a, double distance_factor, int n_min, int n_max) {
  const double d = domain.dist_to_boundary(a);
  // Longest boundary curve sets the spacing; cubic grading stretches the
  // middle of each segment by a factor 3.
  double longest = 0.0;
  bool graded = false;
  for (const auto& c : domain.boundary()) {
    longest = std::max(longest, c.length());
    graded = graded || c.segments().size() > 1;
  }
  const double stretch = graded ? 3.0 : 1.0;
  int n = n_min;
  while (n < n_max && stretch * longest / n * distance_factor >= d) n *= 2;
  return n;
}

ConvergedValue caratheodory_converged(const Domain& domain, Complex a, int n0, double tol, int n_max) {
  ConvergedValue out;
  int n = n0;
  out.value = caratheodory_szego(domain, a, n);
  out.n = n;
  while (2 * n <= n_max) {
    n *= 2;
    out.previous = out.value;
    out.value = caratheodory_szego(domain, a, n);
    out.n = n;
    if (out.relative_change() < tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

std::vector<Complex> garabedian_boundary(const KernelSolution& sol) {
  const BoundaryMesh& m = *sol.mesh;
  std::vector<Complex> out(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    out[j] = Complex(0.0, 1.0) * std::conj(sol.szego_boundary[j]) * std::conj(m.tangents[j]);
  }
  return out;
}

std::pair<Complex, Complex> szego_interior(const KernelSolution& sol, Complex z) {
  check_interior(*sol.mesh, z, 3.0);
  return cauchy(*sol.mesh, sol.szego_boundary, z);
}

std::pair<Complex, Complex> ahlfors_eval(const KernelSolution& sol, Complex z) {
  const Complex a = sol.base_point;
  if (z == a) return {0.0, kTwoPi * sol.diag_value};
  const BoundaryMesh& m = *sol.mesh;
  check_interior(m, z, 3.0);
  // L(z, a) = 1 / (2 pi (z - a)) + l(z) with l holomorphic in the domain.
  const auto lb = garabedian_boundary(sol);
  std::vector<Complex> regular(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) regular[j] = lb[j] - 1.0 / (kTwoPi * (m.nodes[j] - a));
  const auto [s, ds] = cauchy(m, sol.szego_boundary, z);
  const auto [l, dl] = cauchy(m, regular, z);
  // f = 2 pi (z - a) S / (1 + 2 pi (z - a) l)
  const Complex u = z - a;
  const Complex num = kTwoPi * u * s;
  const Complex dnum = kTwoPi * (s + u * ds);
  const Complex den = 1.0 + kTwoPi * u * l;
  const Complex dden = kTwoPi * (l + u * dl);
  return {num / den, (dnum * den - num * dden) / (den * den)};
}

}  // namespace carath::kernels
