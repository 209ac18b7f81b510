#include "carath/extremal/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carath::extremal {

namespace {

// Rows Re(e^{-i theta_l} f(w_m)) <= 1 with f(w_m) = sum_j (alpha_j + i beta_j) V(m, j),
// x = (alpha, beta). Row index m * K + l.
class DiscConstraints : public ConstraintSet {
 public:
  DiscConstraints(Eigen::MatrixXcd values, int angles)
      : m_(static_cast<int>(values.cols())), k_(angles), values_(std::move(values)) {
    rot_.resize(k_);
    for (int l = 0; l < k_; ++l) rot_[l] = std::polar(1.0, -kTwoPi * l / k_);
  }

  int dimension() const override { return 2 * m_; }
  std::size_t size() const override { return static_cast<std::size_t>(values_.rows()) * k_; }

  void multiply(const Eigen::VectorXd& v, Eigen::VectorXd& out) const override {
    Eigen::VectorXcd coef(m_);
    for (int j = 0; j < m_; ++j) coef[j] = Complex(v[j], v[m_ + j]);
    const Eigen::VectorXcd f = values_ * coef;
    out.resize(static_cast<Eigen::Index>(size()));
    for (Eigen::Index s = 0; s < f.size(); ++s) {
      for (int l = 0; l < k_; ++l) out[s * k_ + l] = (rot_[l] * f[s]).real();
    }
  }

  Eigen::VectorXd row(std::size_t j) const override {
    const auto s = static_cast<Eigen::Index>(j / k_);
    const Complex r = rot_[j % k_];
    Eigen::VectorXd out(2 * m_);
    for (int q = 0; q < m_; ++q) {
      const Complex u = r * values_(s, q);
      out[q] = u.real();
      out[m_ + q] = -u.imag();
    }
    return out;
  }

 private:
  int m_;
  int k_;
  Eigen::MatrixXcd values_;
  std::vector<Complex> rot_;
};

Complex area_centroid(const geometry::ParamCurve& c) {
  const auto& p = c.polyline();
  double area = 0.0;
  Complex acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Complex a = p[i];
    const Complex b = p[(i + 1) % p.size()];
    const double cr = cross(a, b);
    area += 0.5 * cr;
    acc += (a + b) * cr;
  }
  return acc / (6.0 * area);
}

std::vector<Complex> curve_samples(const Domain& d, int per_curve, double shift) {
  std::vector<Complex> out;
  for (const auto& c : d.boundary()) {
    for (int j = 0; j < per_curve; ++j) out.push_back(c.point((j + shift) / per_curve));
  }
  return out;
}

}  // namespace

HolomorphicBasis::HolomorphicBasis(Complex a, Complex center, double rho, int degree, std::vector<PoleTerms> poles)
    : a_(a), center_(center), rho_(rho), degree_(degree), poles_(std::move(poles)) {
  if (degree_ < 1) throw std::invalid_argument("basis degree must be positive");
  size_ = degree_;
  for (const auto& p : poles_) size_ += p.terms;
  offsets_.resize(static_cast<std::size_t>(size_));
  const Complex u = (a_ - center_) / rho_;
  Complex pw = 1.0;
  std::size_t idx = 0;
  for (int k = 0; k < degree_; ++k) offsets_[idx++] = (pw *= u);
  for (const auto& p : poles_) {
    const Complex v = p.scale / (a_ - p.pole);
    pw = 1.0;
    for (int k = 0; k < p.terms; ++k) offsets_[idx++] = (pw *= v);
  }
}

void HolomorphicBasis::values(Complex w, Complex* out) const {
  const Complex u = (w - center_) / rho_;
  Complex pw = 1.0;
  std::size_t idx = 0;
  for (int k = 0; k < degree_; ++k, ++idx) {
    pw *= u;
    out[idx] = pw - offsets_[idx];
  }
  for (const auto& p : poles_) {
    const Complex v = p.scale / (w - p.pole);
    pw = 1.0;
    for (int k = 0; k < p.terms; ++k, ++idx) {
      pw *= v;
      out[idx] = pw - offsets_[idx];
    }
  }
}

std::vector<Complex> HolomorphicBasis::derivatives_at_base() const {
  std::vector<Complex> out(static_cast<std::size_t>(size_));
  const Complex u = (a_ - center_) / rho_;
  Complex pw = 1.0;  // u^{k-1}
  std::size_t idx = 0;
  for (int k = 1; k <= degree_; ++k) {
    out[idx++] = static_cast<double>(k) * pw / rho_;
    pw *= u;
  }
  for (const auto& p : poles_) {
    // d/dw (r/(w-p))^k = -k (r/(w-p))^k / (w-p)
    const Complex inv = 1.0 / (a_ - p.pole);
    const Complex v = p.scale * inv;
    pw = 1.0;
    for (int k = 1; k <= p.terms; ++k) {
      pw *= v;
      out[idx++] = -static_cast<double>(k) * pw * inv;
    }
  }
  return out;
}

std::vector<Complex> choose_poles(const Domain& domain) {
  std::vector<Complex> out;
  for (const auto& h : domain.holes()) {
    Complex c = area_centroid(h);
    double dist = 0.0;
    if (h.winding_number(c) == 0 || (h.closest_param(c, &dist), dist < 1e-3 * h.length())) {
      // Deepest point of the hole on a coarse lattice.
      const auto& p = h.polyline();
      double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
      for (const Complex& z : p) {
        xmin = std::min(xmin, z.real());
        xmax = std::max(xmax, z.real());
        ymin = std::min(ymin, z.imag());
        ymax = std::max(ymax, z.imag());
      }
      double best = -1.0;
      constexpr int grid = 64;
      for (int i = 1; i < grid; ++i) {
        for (int j = 1; j < grid; ++j) {
          const Complex z(xmin + (xmax - xmin) * i / grid, ymin + (ymax - ymin) * j / grid);
          if (h.winding_number(z) == 0) continue;
          double d = 0.0;
          h.closest_param(z, &d);
          if (d > best) {
            best = d;
            c = z;
          }
        }
      }
    }
    out.push_back(c);
  }
  return out;
}

ExtremalProblem ExtremalProblem::make(std::shared_ptr<const Domain> domain, Complex a, const ExtremalParams& params) {
  if (params.degree < 1) throw std::invalid_argument("degree must be positive");
  if (params.angle_count < 16) throw std::invalid_argument("angle count must be at least 16");
  if (params.check_factor < 1) throw std::invalid_argument("check factor must be positive");
  ExtremalProblem pr;
  pr.domain = domain;
  pr.base_point = a;
  pr.degree = params.degree;
  pr.poles = choose_poles(*domain);
  pr.boundary_samples = curve_samples(*domain, params.samples_per_curve, 0.0);
  pr.check_samples = curve_samples(*domain, params.samples_per_curve * params.check_factor, 0.5);
  pr.angle_count = params.angle_count;
  pr.lp = params.lp;
  if (params.reflection_terms > 0) {
    const geometry::BoundaryPoint bp = domain->closest_boundary_point(a);
    const Complex q = 2.0 * bp.point - a;
    bool outside = false;
    try {
      outside = !domain->contains(q) && domain->closest_boundary_point(q).distance > 0.5 * bp.distance;
    } catch (const GeometryError&) {
    }
    // Far from the boundary the monomials already resolve the extremal function.
    double rho = 0.0;
    const Complex center = area_centroid(domain->outer());
    for (const Complex& w : pr.boundary_samples) rho = std::max(rho, std::abs(w - center));
    if (outside && bp.distance < 0.25 * rho) {
      pr.reflection_poles.push_back(q);
      pr.reflection_terms = params.reflection_terms;
    }
  }
  const std::size_t dim = 2 * (static_cast<std::size_t>(params.degree) * (1 + pr.poles.size()) +
                               pr.reflection_poles.size() * static_cast<std::size_t>(pr.reflection_terms));
  if (pr.boundary_samples.size() < 8 * dim) {
    throw std::invalid_argument("too few boundary samples for the basis dimension");
  }
  return pr;
}

ExtremalCertificate lp_caratheodory_lower(const ExtremalProblem& problem) {
  const Domain& d = *problem.domain;
  const Complex a = problem.base_point;
  if (!d.contains(a)) throw GeometryError("base point is outside the domain");
  const Complex center = area_centroid(d.outer());
  double rho = 0.0;
  for (const Complex& w : problem.boundary_samples) rho = std::max(rho, std::abs(w - center));
  auto nearest = [&](Complex p) {
    double r = 1e300;
    for (const Complex& w : problem.boundary_samples) r = std::min(r, std::abs(w - p));
    return r;
  };
  std::vector<PoleTerms> poles;
  for (const Complex& p : problem.poles) poles.push_back({p, nearest(p), problem.degree});
  for (const Complex& q : problem.reflection_poles) poles.push_back({q, nearest(q), problem.reflection_terms});
  const HolomorphicBasis basis(a, center, rho, problem.degree, poles);
  const int m = basis.size();
  const auto ns = static_cast<Eigen::Index>(problem.boundary_samples.size());

  Eigen::MatrixXcd phi(ns, m);
  std::vector<Complex> buf(static_cast<std::size_t>(m));
  for (Eigen::Index s = 0; s < ns; ++s) {
    basis.values(problem.boundary_samples[s], buf.data());
    for (int k = 0; k < m; ++k) phi(s, k) = buf[k];
  }
  // Orthonormalize the basis on the samples; numerically dependent columns are dropped.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> pivoted(phi);
  pivoted.setThreshold(1e-11);
  const auto rank = pivoted.rank();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = 0; j < rank; ++j) kept.push_back(pivoted.colsPermutation().indices()[j]);
  std::sort(kept.begin(), kept.end());
  Eigen::MatrixXcd phi_kept(ns, rank);
  for (Eigen::Index j = 0; j < rank; ++j) phi_kept.col(j) = phi.col(kept[j]);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(phi_kept);
  const Eigen::MatrixXcd r = qr.matrixQR().topLeftCorner(rank, rank).triangularView<Eigen::Upper>();
  const double scale = std::sqrt(static_cast<double>(ns));
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(ns, rank);
  q *= scale;

  // f'(a) = D c with c = scale R^{-1} y.
  const auto deriv = basis.derivatives_at_base();
  Eigen::VectorXcd dk(rank);
  for (Eigen::Index j = 0; j < rank; ++j) dk[j] = deriv[static_cast<std::size_t>(kept[j])];
  const Eigen::VectorXcd g = scale * r.transpose().triangularView<Eigen::Lower>().solve(dk);
  Eigen::VectorXd c(2 * rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    // Re((alpha + i beta) g) = alpha Re g - beta Im g
    c[k] = g[k].real();
    c[rank + k] = -g[k].imag();
  }
  const DiscConstraints constraints(std::move(q), problem.angle_count);
  const LpResult lp = maximize(c, constraints, problem.lp);

  Eigen::VectorXcd y(rank);
  for (Eigen::Index k = 0; k < rank; ++k) y[k] = Complex(lp.x[k], lp.x[rank + k]);
  const Eigen::VectorXcd coef = scale * r.triangularView<Eigen::Upper>().solve(y);

  ExtremalCertificate cert;
  cert.coefficients.assign(static_cast<std::size_t>(m), 0.0);
  for (Eigen::Index j = 0; j < rank; ++j) cert.coefficients[static_cast<std::size_t>(kept[j])] = coef[j];
  cert.raw_lp_value = lp.value;
  cert.lp_iterations = lp.iterations;
  cert.lp_optimal = lp.optimal;
  double sup = 0.0;
  for (const Complex& w : problem.check_samples) {
    basis.values(w, buf.data());
    Complex f = 0.0;
    for (int k = 0; k < m; ++k) f += cert.coefficients[k] * buf[k];
    sup = std::max(sup, std::abs(f));
  }
  for (const Complex& w : problem.boundary_samples) {
    basis.values(w, buf.data());
    Complex f = 0.0;
    for (int k = 0; k < m; ++k) f += cert.coefficients[k] * buf[k];
    sup = std::max(sup, std::abs(f));
  }
  cert.sup_check = sup;
  if (!(sup > 0.0) || !(lp.value > 0.0)) throw NumericalError("extremal LP returned the zero function");
  cert.certified_value = lp.value * std::cos(kPi / problem.angle_count) / sup;
  return cert;
}

std::vector<FieldValue> lp_metric_field(std::shared_ptr<const Domain> domain, const std::vector<Complex>& grid,
                                        const ExtremalParams& params) {
  std::vector<FieldValue> out;
  out.reserve(grid.size());
  for (const Complex& z : grid) {
    FieldValue v;
    v.point = z;
    try {
      v.value = lp_caratheodory_lower(ExtremalProblem::make(domain, z, params)).certified_value;
      v.ok = true;
    } catch (const std::exception& e) {
      v.error = e.what();
    }
    out.push_back(std::move(v));
  }
  return out;
}

kernels::MetricEvaluator lp_evaluator(std::shared_ptr<const Domain> domain, ExtremalParams params) {
  return kernels::MetricEvaluator(kernels::MetricKind::lp, domain, [domain, params](Complex z) {
    return lp_caratheodory_lower(ExtremalProblem::make(domain, z, params)).certified_value;
  });
}

}  // namespace carath::extremal
