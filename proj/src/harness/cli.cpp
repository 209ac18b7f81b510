#include "carath/harness/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "carath/geometry/grid.hpp"
#include "carath/harness/domain_io.hpp"
#include "carath/harness/fixtures.hpp"
#include "carath/harness/report.hpp"

namespace carath::harness {

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFail = 2;

struct Common {
  std::uint64_t seed = 1;
  int n = 0;
  int degree = 24;
  double delta = 0.0;  ///< 0 = subcommand default
  double spacing = 0.0;
  double h = 0.0;
  std::string method = "auto";

  MethodOptions options() const {
    MethodOptions o;
    o.szego.fixed_n = n;
    o.lp.degree = degree;
    return o;
  }

  void defaults(double d, double s) {
    if (!(delta > 0.0)) delta = d;
    if (!(spacing > 0.0)) spacing = s;
  }
};

Complex parse_point(const std::string& text) {
  std::stringstream ss(text);
  double x = 0.0;
  double y = 0.0;
  char comma = 0;
  if (!(ss >> x)) throw std::invalid_argument("bad point: " + text);
  if (ss >> comma) {
    if (comma != ',' || !(ss >> y)) throw std::invalid_argument("bad point (expected x,y): " + text);
  }
  if (ss >> comma) throw std::invalid_argument("bad point: " + text);
  return {x, y};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

void write(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

// Explicit points, a uniform random sample or the default lattice grid.
std::vector<Complex> select_points(const Domain& d, const std::vector<std::string>& points, int random,
                                   const Common& c) {
  std::vector<Complex> out;
  for (const auto& p : points) out.push_back(parse_point(p));
  if (random > 0) {
    std::mt19937_64 rng(c.seed);
    const auto box = d.bounding_box();
    std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
    std::uniform_real_distribution<double> uy(box.ymin, box.ymax);
    int guard = 0;
    while (static_cast<int>(out.size()) < static_cast<int>(points.size()) + random) {
      if (++guard > 1000 * random) throw GeometryError("random sampling found too few interior points");
      const Complex z(ux(rng), uy(rng));
      try {
        if (d.contains(z) && d.dist_to_boundary(z) >= c.delta) out.push_back(z);
      } catch (const GeometryError&) {
      }
    }
  }
  if (out.empty()) out = geometry::grid_sample(d, c.delta, c.spacing);
  return out;
}

DiscShape disc_of(const Domain& d) {
  const auto* s = std::get_if<DiscShape>(&d.closed_form());
  if (s == nullptr) throw std::invalid_argument("domain " + d.label() + " is not a disc");
  return *s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Carathéodory and Poincaré metrics on planar domains", "carath"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Seed for random sampling");
    sub->add_option("--n", c.n, "Szegő nodes per boundary curve (0 = automatic)");
    sub->add_option("--degree", c.degree, "LP polynomial degree");
    sub->add_option("--delta", c.delta, "Minimum boundary distance of grid points (default 0.1; submult 0.05, solynin 0.02)");
    sub->add_option("--spacing", c.spacing, "Grid spacing (default 0.1; submult 0.05, solynin 0.07)");
    sub->add_option("--h", c.h, "Finite-difference spacing (0 = default)");
    sub->add_option("--method", c.method, "auto, szego, lp or closed");
  };

  std::string domain_file;
  std::string out_file;
  std::vector<std::string> points;
  int random = 0;

  auto* metric = app.add_subcommand("metric", "Carathéodory density at points or on a grid");
  add_common(metric);
  metric->add_option("--domain", domain_file, "Domain file or fixture name")->required();
  metric->add_option("--point", points, "Point x,y (repeatable)");
  metric->add_option("--random", random, "Number of random interior points");
  metric->add_option("--out", out_file, "CSV output file");

  auto* curv = app.add_subcommand("curvature", "Curvature of the Carathéodory metric");
  add_common(curv);
  curv->add_option("--domain", domain_file, "Domain file or fixture name")->required();
  curv->add_option("--point", points, "Point x,y (repeatable)");
  curv->add_option("--random", random, "Number of random interior points");
  curv->add_option("--out", out_file, "CSV output file");

  double tol = 1e-3;
  double trend_t = 0.0;
  auto* suita = app.add_subcommand("suita", "Check kappa <= -4 on a grid and near the boundary");
  add_common(suita);
  suita->add_option("--domain", domain_file, "Domain file or fixture name")->required();
  suita->add_option("--tol", tol, "Tolerance above -4");
  suita->add_option("--trend-t", trend_t, "Outer-curve parameter of the near-boundary trend");
  suita->add_option("--out", out_file, "CSV output file");

  std::string d1_file;
  std::string d2_file;
  bool nested = false;
  std::string pair_name;
  auto* solynin = app.add_subcommand("solynin", "Poincaré ratio for two discs");
  add_common(solynin);
  solynin->add_option("--d1", d1_file, "First disc file");
  solynin->add_option("--d2", d2_file, "Second disc file");
  solynin->add_flag("--nested", nested, "Use B(0,0.5) and B(0,1)");
  solynin->add_option("--pair", pair_name, "Shipped pair: symmetric, asymmetric, near_tangent, nested");
  solynin->add_option("--out", out_file, "CSV output file");

  std::string svg_file;
  double tol_rel = 0.02;
  auto* submult = app.add_subcommand("submult", "c_int c_uni / (c_1 c_2) against sqrt(C/4)");
  add_common(submult);
  submult->add_option("--d1", d1_file, "First domain")->required();
  submult->add_option("--d2", d2_file, "Second domain")->required();
  submult->add_option("--tol-rel", tol_rel, "Relative tolerance on the bound");
  submult->add_option("--out", out_file, "Per-point CSV output file");
  submult->add_option("--svg", svg_file, "SVG heatmap of the ratio");

  std::string point_text = "0,0";
  std::string eps_text = "0.1,0.05,0.02,0.01";
  auto* thick = app.add_subcommand("thicken-converge", "c of eps-thickenings as eps decreases");
  add_common(thick);
  thick->add_option("--domain", domain_file, "Domain file or fixture name")->required();
  thick->add_option("--point", point_text, "Point x,y");
  thick->add_option("--eps", eps_text, "Decreasing eps list");
  thick->add_option("--out", out_file, "CSV output file");

  double t_param = 0.0;
  double radius = 0.5;
  std::string dist_text = "0.1,0.05,0.02";
  double loc_tol = 0.05;
  auto* localize = app.add_subcommand("localize", "c_{U∩D} / c_D along an inward normal");
  add_common(localize);
  localize->add_option("--domain", domain_file, "Domain file or fixture name")->required();
  localize->add_option("--t", t_param, "Outer-curve parameter of the boundary point");
  localize->add_option("--radius", radius, "Radius of U");
  localize->add_option("--distances", dist_text, "Decreasing distance list");
  localize->add_option("--tol", loc_tol, "Tolerance on the final ratio");
  localize->add_option("--out", out_file, "CSV output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    const Method method = parse_method(c.method);
    const MethodOptions options = c.options();

    if (submult->parsed()) {
      c.defaults(0.05, 0.05);
    } else if (solynin->parsed()) {
      c.defaults(0.02, 0.07);
    } else {
      c.defaults(0.1, 0.1);
    }

    if (metric->parsed()) {
      const auto d = std::make_shared<const Domain>(load_domain(domain_file));
      const auto eval = make_evaluator(d, method, options);
      const auto pts = select_points(*d, points, random, c);
      std::vector<double> values;
      for (const Complex z : pts) values.push_back(eval(z));
      write(out_file, metric_csv(pts, values, kernels::to_string(eval.kind())), out);
      return kPass;
    }

    if (curv->parsed()) {
      const auto d = std::make_shared<const Domain>(load_domain(domain_file));
      const auto eval = make_evaluator(d, method, options);
      std::vector<curvature::CurvatureEstimate> est;
      double lo = 1e300;
      double hi = -1e300;
      for (const Complex z : select_points(*d, points, random, c)) {
        est.push_back(curvature::curvature_at(eval, z, c.h));
        lo = std::min(lo, est.back().kappa_refined);
        hi = std::max(hi, est.back().kappa_refined);
      }
      write(out_file, curvature_csv(est), out);
      err << fmt::format("points={} kappa_min={} kappa_max={} C_hat={}\n", est.size(), num(lo), num(hi), num(-lo));
      return kPass;
    }

    if (suita->parsed()) {
      const auto d = std::make_shared<const Domain>(load_domain(domain_file));
      SuitaParams p;
      p.delta = c.delta;
      p.spacing = c.spacing;
      p.h = c.h;
      p.tol = tol;
      p.trend_t = trend_t;
      p.method = method;
      p.options = options;
      const auto r = verify_suita(d, p);
      write(out_file, suita_csv(r), out);
      err << fmt::format("points={} kappa_min={} kappa_max={} violations={} trend_decreasing={} {}\n",
                         r.scan.estimates.size(), num(r.scan.kappa_min), num(r.scan.kappa_max), r.violations,
                         r.trend_decreasing ? "yes" : "no", r.pass ? "PASS" : "FAIL");
      return r.pass ? kPass : kFail;
    }

    if (solynin->parsed()) {
      DiscShape a{-0.5, 1.0};
      DiscShape b{0.5, 1.0};
      if (nested) pair_name = "nested";
      if (!pair_name.empty()) {
        bool found = false;
        for (const auto& pr : fixtures::disc_pairs()) {
          if (pr.name != pair_name) continue;
          a = disc_of(pr.first);
          b = disc_of(pr.second);
          found = true;
        }
        if (!found) throw std::invalid_argument("unknown disc pair: " + pair_name);
      } else if (!d1_file.empty() || !d2_file.empty()) {
        if (d1_file.empty() || d2_file.empty()) throw std::invalid_argument("--d1 and --d2 go together");
        a = disc_of(load_domain(d1_file));
        b = disc_of(load_domain(d2_file));
      }
      const auto r = verify_solynin_two_discs(a, b, c.delta, c.spacing);
      write(out_file, solynin_csv(r), out);
      err << fmt::format("points={} max_ratio={} min_ratio={} center_ratio={} {}\n", r.points.size(),
                         num(r.max_ratio), num(r.min_ratio), num(r.center_ratio), r.pass ? "PASS" : "FAIL");
      return r.pass ? kPass : kFail;
    }

    if (submult->parsed()) {
      const auto d1 = std::make_shared<const Domain>(load_domain(d1_file));
      const auto d2 = std::make_shared<const Domain>(load_domain(d2_file));
      SubmultParams p;
      p.delta = c.delta;
      p.spacing = c.spacing;
      p.h = c.h;
      p.tol_rel = tol_rel;
      p.method = method;
      p.options = options;
      const auto r = verify_submult(d1, d2, p);
      if (!out_file.empty()) write(out_file, pair_csv(r), out);
      if (!svg_file.empty()) write(svg_file, pair_svg(r, *d1, *d2, c.spacing), out);
      out << pair_summary_csv(r);
      if (r.dropped > 0) err << fmt::format("warning: {} grid points dropped\n", r.dropped);
      if (r.max_ratio > 1.0) err << fmt::format("note: max_ratio {} exceeds 1\n", num(r.max_ratio));
      return r.pass ? kPass : kFail;
    }

    if (thick->parsed()) {
      const Domain d = load_domain(domain_file);
      const auto r = converge_thickening(d, parse_point(point_text), parse_list(eps_text), method, options);
      write(out_file, convergence_csv(r), out);
      err << fmt::format("monotone={} rel_gap_at_min_eps={}\n", r.monotone ? "yes" : "no",
                         num(r.rel_gap_at_min_eps));
      return r.monotone ? kPass : kFail;
    }

    if (localize->parsed()) {
      const auto d = std::make_shared<const Domain>(load_domain(domain_file));
      LocalizationParams p;
      p.t = t_param;
      p.radius = radius;
      p.distances = parse_list(dist_text);
      p.tol = loc_tol;
      p.method = method;
      p.options = options;
      const auto r = localization_experiment(d, p);
      write(out_file, localization_csv(r), out);
      err << fmt::format("final_ratio={} {}\n", num(r.ratios.back()),
                         r.asymptotic ? "asymptotic" : "non-asymptotic regime");
      return r.asymptotic ? kPass : kFail;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace carath::harness
