#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "carath/geometry/mesh.hpp"

namespace carath::kernels {

using geometry::BoundaryMesh;
using geometry::Domain;

/// Boundary values of the Szegő kernel S(., a) for one base point.
struct KernelSolution {
  Complex base_point;
  std::shared_ptr<const BoundaryMesh> mesh;
  std::vector<Complex> szego_boundary;  ///< S(w_j, a)
  double diag_value = 0.0;              ///< S(a, a) from the reproducing sum
  double diag_cauchy = 0.0;             ///< S(a, a) from Cauchy quadrature

  double caratheodory() const { return kTwoPi * diag_value; }
};

/// Nyström discretization of the Kerzman–Stein equation on a fixed mesh.
///
/// With arclength weights w_j the system is assembled in the symmetric form
/// B = W^{1/2} A W^{1/2}, which is skew-hermitian. I + B is factored once;
/// each base point costs one triangular solve.
class KerzmanStein {
 public:
  explicit KerzmanStein(std::shared_ptr<const BoundaryMesh> mesh);

  /// Weighted Kerzman–Stein matrix B (without the identity).
  static Eigen::MatrixXcd weighted_matrix(const BoundaryMesh& mesh);

  /// Throws GeometryError if a is outside the domain or closer to the
  /// boundary than min_distance_factor node spacings.
  KernelSolution solve(Complex a, double min_distance_factor = 3.0) const;

  const std::shared_ptr<const BoundaryMesh>& mesh() const { return mesh_; }

 private:
  std::shared_ptr<const BoundaryMesh> mesh_;
  Eigen::MatrixXcd factors_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
};

KernelSolution solve_szego(std::shared_ptr<const BoundaryMesh> mesh, Complex a);
KernelSolution solve_szego(const BoundaryMesh& mesh, Complex a);

/// c_D(a) = 2 pi S(a, a) on a mesh with n nodes per boundary curve.
double caratheodory_szego(const Domain& domain, Complex a, int n);

/// Smallest power-of-two n (per curve, from n_min up to n_max) whose mesh
/// spacing is below dist_to_boundary(a) / distance_factor.
int szego_resolution(const Domain& domain, Complex a, double distance_factor = 4.0, int n_min = 128,
                     int n_max = 2048);

/// Result of a mesh-doubling run.
struct ConvergedValue {
  double value = 0.0;
  double previous = 0.0;
  int n = 0;  ///< finest n used
  bool converged = false;

  double relative_change() const { return std::abs(value - previous) / std::abs(value); }
};

/// Solves at n, 2n, 4n, ... until the relative change in c_D(a) drops
/// below tol or n exceeds n_max.
ConvergedValue caratheodory_converged(const Domain& domain, Complex a, int n0, double tol, int n_max = 2048);

/// Garabedian kernel L(w_j, a) = i conj(S(w_j, a)) conj(T(w_j)) at the mesh nodes.
std::vector<Complex> garabedian_boundary(const KernelSolution& sol);

/// Interior value of S(z, a) and its z-derivative by Cauchy quadrature.
std::pair<Complex, Complex> szego_interior(const KernelSolution& sol, Complex z);

/// Ahlfors map f_a = S(., a) / L(., a) and its derivative at an interior z.
/// At z == a returns (0, 2 pi S(a, a)).
std::pair<Complex, Complex> ahlfors_eval(const KernelSolution& sol, Complex z);

}  // namespace carath::kernels
