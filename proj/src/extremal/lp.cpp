#include "carath/extremal/lp.hpp"

#include <cmath>
#include <vector>

#include "carath/common.hpp"

namespace carath::extremal {

namespace {

// Ratio test along p: the first constraint outside the working set that
// becomes active. Returns size() when nothing blocks.
std::size_t ratio_test(const Eigen::VectorXd& ap, const Eigen::VectorXd& ax, const Eigen::VectorXd& b,
                       const std::vector<char>& in_work, bool bland, double& step) {
  const std::size_t n = static_cast<std::size_t>(ap.size());
  const double threshold = 1e-11 * ap.cwiseAbs().maxCoeff();
  std::size_t best = n;
  double tmin = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (in_work[j] || !(ap[j] > threshold)) continue;
    const double t = std::max(0.0, b[j] - ax[j]) / ap[j];
    if (best == n || t < tmin) {
      best = j;
      tmin = t;
    }
  }
  if (best == n) return n;
  // Among (near) ties prefer the smallest index (Bland) or the largest pivot.
  const double slack = 1e-12 * std::max(1.0, tmin) + 1e-15;
  for (std::size_t j = 0; j < n; ++j) {
    if (in_work[j] || !(ap[j] > threshold)) continue;
    const double t = std::max(0.0, b[j] - ax[j]) / ap[j];
    if (t > tmin + slack) continue;
    if (bland) {
      best = j;
      break;
    }
    if (ap[j] > ap[best]) best = j;
  }
  step = std::max(0.0, b[best] - ax[best]) / ap[best];
  return best;
}

}  // namespace

LpResult maximize(const Eigen::VectorXd& c, const ConstraintSet& constraints, const LpOptions& options) {
  const int d = constraints.dimension();
  const std::size_t n = constraints.size();
  if (c.size() != d) throw std::invalid_argument("objective and constraints differ in dimension");
  if (n == 0) throw NumericalError("unbounded LP: no constraints");

  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double u = std::fmod(0.6180339887498949 * static_cast<double>(j + 1), 1.0);
    b[static_cast<Eigen::Index>(j)] = 1.0 - options.perturbation * u;
  }
  const double cscale = std::max(c.cwiseAbs().maxCoeff(), 1e-300);
  const double mult_tol = options.tolerance * cscale;

  LpResult res;
  res.x = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd ax = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Eigen::VectorXd ap(static_cast<Eigen::Index>(n));
  std::vector<std::size_t> work;
  std::vector<char> in_work(n, 0);
  Eigen::MatrixXd rows(d, 0);  // working rows as columns
  Eigen::MatrixXd inv;
  int since_refactor = 0;
  int degenerate = 0;

  for (res.iterations = 0; res.iterations < options.max_iterations; ++res.iterations) {
    const bool bland = degenerate >= options.degenerate_switch;
    const auto k = static_cast<Eigen::Index>(work.size());
    Eigen::VectorXd p;
    Eigen::Index leave = -1;
    if (k < d) {
      Eigen::VectorXd proj = c;
      if (k > 0) {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(rows);
        const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, k);
        proj -= q * (q.transpose() * c);
      }
      if (proj.norm() <= 1e-12 * c.norm()) {
        const Eigen::VectorXd lambda = rows.colPivHouseholderQr().solve(c);
        Eigen::Index i = 0;
        if (lambda.minCoeff(&i) >= -mult_tol) {
          res.optimal = true;
          break;
        }
        in_work[work[i]] = 0;
        work.erase(work.begin() + i);
        Eigen::MatrixXd smaller(d, k - 1);
        for (Eigen::Index r = 0, s = 0; r < k; ++r) {
          if (r != i) smaller.col(s++) = rows.col(r);
        }
        rows = std::move(smaller);
        continue;
      }
      p = proj;
    } else {
      // inv = B^{-1} for the basis B whose rows are the working constraints.
      if (since_refactor >= 50 || inv.rows() != d) {
        inv = rows.transpose().partialPivLu().inverse();
        since_refactor = 0;
      }
      const Eigen::VectorXd lambda = inv.transpose() * c;
      if (bland) {
        std::size_t best_id = n;
        for (Eigen::Index i = 0; i < k; ++i) {
          if (lambda[i] < -mult_tol && work[i] < best_id) {
            best_id = work[i];
            leave = i;
          }
        }
      } else {
        // Steepest edge: rate of objective increase per unit step length.
        double best = 0.0;
        for (Eigen::Index i = 0; i < k; ++i) {
          if (!(lambda[i] < -mult_tol)) continue;
          const double rate = -lambda[i] / inv.col(i).norm();
          if (rate > best) {
            best = rate;
            leave = i;
          }
        }
      }
      if (leave < 0) {
        res.optimal = true;
        break;
      }
      p = -inv.col(leave);
    }

    constraints.multiply(p, ap);
    double step = 0.0;
    const std::size_t enter = ratio_test(ap, ax, b, in_work, bland, step);
    if (enter == n) throw NumericalError("unbounded LP: constraints do not bound the objective");
    res.x += step * p;
    ax += step * ap;
    degenerate = (step * p.norm() < 1e-14 * std::max(1.0, res.x.norm())) ? degenerate + 1 : 0;

    const Eigen::VectorXd a = constraints.row(enter);
    in_work[enter] = 1;
    if (leave >= 0) {
      // Sherman–Morrison for B + e_i (a - a_i)^T; note B^{-1} e_i = -p and a_i^T p = -1.
      const double denom = -ap[static_cast<Eigen::Index>(enter)];
      const Eigen::RowVectorXd v = (a - rows.col(leave)).transpose() * inv;
      inv.noalias() += (p / denom) * v;
      ++since_refactor;
      in_work[work[leave]] = 0;
      work[leave] = enter;
      rows.col(leave) = a;
    } else {
      work.push_back(enter);
      rows.conservativeResize(Eigen::NoChange, k + 1);
      rows.col(k) = a;
    }
  }
  res.value = c.dot(res.x);
  return res;
}

}  // namespace carath::extremal
