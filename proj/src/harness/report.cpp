#include "carath/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <fmt/format.h>

namespace carath::harness {

std::string num(double v) { return fmt::format("{:.12g}", v); }

std::string metric_csv(const std::vector<Complex>& points, const std::vector<double>& values,
                       const std::string& kind) {
  std::string out = "re,im,c,method\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    fmt::format_to(std::back_inserter(out), "{},{},{},{}\n", num(points[k].real()), num(points[k].imag()),
                   num(values[k]), kind);
  }
  return out;
}

std::string curvature_csv(const std::vector<curvature::CurvatureEstimate>& estimates) {
  std::string out = "re,im,h,c,kappa,kappa_refined\n";
  for (const auto& e : estimates) {
    fmt::format_to(std::back_inserter(out), "{},{},{},{},{},{}\n", num(e.point.real()), num(e.point.imag()),
                   num(e.h), num(e.metric_value), num(e.kappa), num(e.kappa_refined));
  }
  return out;
}

std::string suita_csv(const SuitaReport& report) {
  std::string out = "kind,distance,re,im,h,c,kappa,kappa_refined\n";
  auto row = [&](const char* kind, double dist, const curvature::CurvatureEstimate& e) {
    fmt::format_to(std::back_inserter(out), "{},{},{},{},{},{},{},{}\n", kind, dist < 0.0 ? "" : num(dist),
                   num(e.point.real()), num(e.point.imag()), num(e.h), num(e.metric_value), num(e.kappa),
                   num(e.kappa_refined));
  };
  for (const auto& e : report.scan.estimates) row("grid", -1.0, e);
  for (const auto& t : report.trend) row("trend", t.distance, t.estimate);
  return out;
}

std::string solynin_csv(const SolyninReport& report) {
  std::string out = "re,im,lambda_int,lambda_uni,lambda_d1,lambda_d2,ratio\n";
  for (const auto& p : report.points) {
    fmt::format_to(std::back_inserter(out), "{},{},{},{},{},{},{}\n", num(p.z.real()), num(p.z.imag()),
                   num(p.lambda_int), num(p.lambda_uni), num(p.lambda_1), num(p.lambda_2), num(p.ratio));
  }
  return out;
}

std::string pair_csv(const PairReport& report) {
  std::string out = "re,im,c_int,c_uni,c_d1,c_d2,ratio,component,kappa1,kappa2\n";
  for (const auto& p : report.points) {
    fmt::format_to(std::back_inserter(out), "{},{},{},{},{},{},{},{},{},{}\n", num(p.z.real()), num(p.z.imag()),
                   num(p.c_int), num(p.c_uni), num(p.c_d1), num(p.c_d2), num(p.ratio), p.component,
                   num(p.kappa1), num(p.kappa2));
  }
  return out;
}

std::string pair_summary_csv(const PairReport& report) {
  return fmt::format("d1,d2,components,points,dropped,max_ratio,C_hat,bound,tol_rel,pass\n"
                     "{},{},{},{},{},{},{},{:.6f},{},{}\n",
                     report.label1, report.label2, report.components, report.points.size(), report.dropped,
                     num(report.max_ratio), num(report.c_hat), report.bound, num(report.tol_rel),
                     report.pass ? "yes" : "no");
}

std::string convergence_csv(const ConvergenceReport& report) {
  std::string out = "eps,c_eps,c_limit,rel_gap\n";
  for (std::size_t k = 0; k < report.eps.size(); ++k) {
    const double gap = (report.limit_value - report.values[k]) / report.limit_value;
    fmt::format_to(std::back_inserter(out), "{},{},{},{}\n", num(report.eps[k]), num(report.values[k]),
                   num(report.limit_value), num(gap));
  }
  return out;
}

std::string localization_csv(const LocalizationReport& report) {
  std::string out = "distance,re,im,c_local,c_full,ratio\n";
  for (std::size_t k = 0; k < report.points.size(); ++k) {
    fmt::format_to(std::back_inserter(out), "{},{},{},{},{},{}\n", num(report.distances[k]),
                   num(report.points[k].real()), num(report.points[k].imag()), num(report.c_local[k]),
                   num(report.c_full[k]), num(report.ratios[k]));
  }
  return out;
}

namespace {

// Blue (low) through white to red (high).
std::string color(double s) {
  s = std::clamp(s, 0.0, 1.0);
  const auto lerp = [](double a, double b, double t) { return static_cast<int>(std::lround(a + (b - a) * t)); };
  if (s < 0.5) {
    const double t = 2.0 * s;
    return fmt::format("#{:02x}{:02x}{:02x}", lerp(49, 255, t), lerp(54, 255, t), lerp(149, 255, t));
  }
  const double t = 2.0 * s - 1.0;
  return fmt::format("#{:02x}{:02x}{:02x}", lerp(255, 165, t), lerp(255, 0, t), lerp(255, 38, t));
}

void path(std::string& out, const Domain& d, double x0, double y1, double scale, const char* stroke) {
  for (const auto& c : d.boundary()) {
    out += "<path fill=\"none\" stroke-width=\"1.5\" stroke=\"";
    out += stroke;
    out += "\" d=\"";
    constexpr int samples = 400;
    for (int k = 0; k <= samples; ++k) {
      const Complex z = c.point(static_cast<double>(k % samples) / samples);
      fmt::format_to(std::back_inserter(out), "{}{:.2f},{:.2f}", k == 0 ? "M" : " L", (z.real() - x0) * scale,
                     (y1 - z.imag()) * scale);
    }
    out += "\"/>\n";
  }
}

}  // namespace

std::string pair_svg(const PairReport& report, const Domain& d1, const Domain& d2, double spacing) {
  const auto b1 = d1.bounding_box();
  const auto b2 = d2.bounding_box();
  const double x0 = std::min(b1.xmin, b2.xmin) - 0.05;
  const double x1 = std::max(b1.xmax, b2.xmax) + 0.05;
  const double y0 = std::min(b1.ymin, b2.ymin) - 0.05;
  const double y1 = std::max(b1.ymax, b2.ymax) + 0.05;
  const double scale = 600.0 / std::max(x1 - x0, y1 - y0);
  double lo = 1e300;
  double hi = -1e300;
  for (const auto& p : report.points) {
    lo = std::min(lo, p.ratio);
    hi = std::max(hi, p.ratio);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      (x1 - x0) * scale, (y1 - y0) * scale + 30.0);
  const double cell = spacing * scale;
  for (const auto& p : report.points) {
    fmt::format_to(std::back_inserter(out), "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n",
                   (p.z.real() - x0) * scale - 0.5 * cell, (y1 - p.z.imag()) * scale - 0.5 * cell, cell, cell,
                   color((p.ratio - lo) / span));
  }
  path(out, d1, x0, y1, scale, "#222222");
  path(out, d2, x0, y1, scale, "#666666");
  fmt::format_to(std::back_inserter(out),
                 "<text x=\"8\" y=\"{:.0f}\" font-family=\"sans-serif\" font-size=\"13\">"
                 "R(z) in [{:.6f}, {:.6f}], bound {:.6f}</text>\n</svg>\n",
                 (y1 - y0) * scale + 20.0, lo, hi, report.bound);
  return out;
}

}  // namespace carath::harness
