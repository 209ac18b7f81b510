#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace carath::extremal {

/// Constraint rows a_j of the system a_j^T x <= 1, possibly implicit.
class ConstraintSet {
 public:
  virtual ~ConstraintSet() = default;
  virtual int dimension() const = 0;
  virtual std::size_t size() const = 0;
  /// out[j] = a_j^T v for every row.
  virtual void multiply(const Eigen::VectorXd& v, Eigen::VectorXd& out) const = 0;
  virtual Eigen::VectorXd row(std::size_t j) const = 0;
};

class DenseConstraints : public ConstraintSet {
 public:
  explicit DenseConstraints(Eigen::MatrixXd rows) : rows_(std::move(rows)) {}
  int dimension() const override { return static_cast<int>(rows_.cols()); }
  std::size_t size() const override { return static_cast<std::size_t>(rows_.rows()); }
  void multiply(const Eigen::VectorXd& v, Eigen::VectorXd& out) const override { out.noalias() = rows_ * v; }
  Eigen::VectorXd row(std::size_t j) const override { return rows_.row(static_cast<Eigen::Index>(j)).transpose(); }

 private:
  Eigen::MatrixXd rows_;
};

struct LpOptions {
  int max_iterations = 20000;
  double tolerance = 1e-10;
  /// Right-hand sides are tightened to 1 - perturbation * u_j, u_j in [0, 1)
  /// from a fixed sequence, to break ties between degenerate vertices.
  double perturbation = 1e-11;
  /// Consecutive zero-length steps before switching to Bland's rule.
  int degenerate_switch = 30;
};

struct LpResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool optimal = false;
};

/// max c^T x subject to a_j^T x <= 1, by an active-set simplex method started
/// from the interior point x = 0. Every iterate is feasible, so a result
/// returned after max_iterations is still a feasible point. Throws
/// NumericalError when the objective is unbounded.
LpResult maximize(const Eigen::VectorXd& c, const ConstraintSet& constraints, const LpOptions& options = {});

}  // namespace carath::extremal
