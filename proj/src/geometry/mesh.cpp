#include "carath/geometry/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace carath::geometry {

namespace {

struct Grading {
  double p;
  double map(double s) const {
    const double a = std::pow(s, p);
    const double b = std::pow(1.0 - s, p);
    return a / (a + b);
  }
  double rate(double s) const {
    const double a = std::pow(s, p);
    const double b = std::pow(1.0 - s, p);
    return p * std::pow(s, p - 1.0) * std::pow(1.0 - s, p - 1.0) / ((a + b) * (a + b));
  }
};

std::vector<int> split_nodes(const ParamCurve& c, int n) {
  const std::size_t ns = c.segments().size();
  std::vector<int> counts(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    counts[i] = std::max(8, static_cast<int>(std::lround(n * c.segment_length(i) / c.length())));
  }
  // Match the requested total where the minimum count allows it.
  int total = std::accumulate(counts.begin(), counts.end(), 0);
  while (total != n) {
    auto it = std::max_element(counts.begin(), counts.end());
    if (total > n) {
      if (*it <= 8) break;
      --*it;
      --total;
    } else {
      ++*it;
      ++total;
    }
  }
  return counts;
}

}  // namespace

double BoundaryMesh::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

BoundaryMesh mesh_boundary(std::shared_ptr<const Domain> domain, int n_per_curve, double grading_exponent) {
  if (n_per_curve < 8 || n_per_curve % 2 != 0) throw std::invalid_argument("n_per_curve must be even and >= 8");
  if (!(grading_exponent >= 1.0)) throw std::invalid_argument("grading exponent must be >= 1");
  BoundaryMesh mesh;
  mesh.owner = domain;
  const Grading grading{grading_exponent};
  const auto& curves = domain->boundary();
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const ParamCurve& c = curves[ci];
    const std::size_t first = mesh.nodes.size();
    auto push = [&](const PointJet& j, double w) {
      mesh.nodes.push_back(j.z);
      mesh.tangents.push_back(j.d1 / std::abs(j.d1));
      mesh.weights.push_back(w);
      mesh.curve.push_back(ci);
    };
    if (c.segments().size() == 1) {
      const Segment& seg = c.segments()[0];
      for (int j = 0; j < n_per_curve; ++j) {
        const PointJet pj = seg.jet(static_cast<double>(j) / n_per_curve);
        push(pj, std::abs(pj.d1) / n_per_curve);
      }
    } else {
      const auto counts = split_nodes(c, n_per_curve);
      for (std::size_t i = 0; i < counts.size(); ++i) {
        const Segment& seg = c.segments()[i];
        const int m = counts[i];
        for (int j = 0; j < m; ++j) {
          const double s = (j + 0.5) / m;
          const PointJet pj = seg.jet(grading.map(s));
          push(pj, std::abs(pj.d1) * grading.rate(s) / m);
        }
      }
    }
    const std::size_t last = mesh.nodes.size();
    for (std::size_t k = first; k < last; ++k) {
      const std::size_t next = (k + 1 < last) ? k + 1 : first;
      mesh.max_spacing = std::max(mesh.max_spacing, std::abs(mesh.nodes[next] - mesh.nodes[k]));
    }
  }
  return mesh;
}

BoundaryMesh mesh_boundary(const Domain& domain, int n_per_curve, double grading_exponent) {
  return mesh_boundary(std::make_shared<const Domain>(domain), n_per_curve, grading_exponent);
}

}  // namespace carath::geometry
