#include "carath/harness/domain_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "carath/geometry/shapes.hpp"
#include "carath/harness/fixtures.hpp"

namespace carath::harness {

namespace {

using geometry::ParamCurve;
using nlohmann::json;

Complex point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

double positive(const json& obj, const char* key) {
  if (!obj.contains(key)) throw std::invalid_argument(std::string("missing key: ") + key);
  const double v = obj.at(key).get<double>();
  if (!(v > 0.0)) throw std::invalid_argument(std::string(key) + " must be positive");
  return v;
}

Complex center_of(const json& obj) { return obj.contains("center") ? point(obj.at("center")) : Complex(0.0); }

const char* const kPrimitives[] = {"disc", "ellipse", "fourier_blob", "samples", "annulus", "fixture"};

std::string primitive_key(const json& spec) {
  if (!spec.is_object()) throw std::invalid_argument("domain description must be an object");
  std::string found;
  for (const char* k : kPrimitives) {
    if (!spec.contains(k)) continue;
    if (!found.empty()) throw std::invalid_argument("more than one primitive in domain description");
    found = k;
  }
  if (found.empty()) throw std::invalid_argument("domain description has no primitive");
  return found;
}

ParamCurve curve_from(const std::string& key, const json& body) {
  if (key == "disc") return ParamCurve::circle(center_of(body), positive(body, "radius"));
  if (key == "ellipse") return geometry::ellipse_curve(center_of(body), positive(body, "a"), positive(body, "b"));
  if (key == "fourier_blob") {
    std::vector<geometry::FourierMode> modes;
    for (const auto& m : body.value("modes", json::array())) {
      if (!m.is_array() || m.size() != 3) throw std::invalid_argument("mode must be [k, amplitude, phase]");
      modes.push_back({m[0].get<int>(), m[1].get<double>(), m[2].get<double>()});
    }
    return geometry::fourier_blob_curve(center_of(body), positive(body, "radius"), modes);
  }
  if (key == "samples") {
    if (!body.is_array()) throw std::invalid_argument("samples must be a list of points");
    std::vector<Complex> pts;
    for (const auto& p : body) pts.push_back(point(p));
    return ParamCurve::from_samples(pts);
  }
  throw std::invalid_argument("primitive cannot describe a single curve: " + key);
}

Domain parse_impl(const json& spec) {
  const std::string key = primitive_key(spec);
  const json& body = spec.at(key);
  const std::string label = spec.value("label", key);
  std::vector<ParamCurve> holes;
  if (spec.contains("holes")) {
    for (const auto& h : spec.at("holes")) {
      const std::string hk = primitive_key(h);
      holes.push_back(curve_from(hk, h.at(hk)));
    }
  }
  if (key == "fixture") {
    if (!holes.empty()) throw std::invalid_argument("fixtures cannot take extra holes");
    Domain d = fixtures::by_name(body.get<std::string>());
    if (spec.contains("label")) d.set_label(label);
    return d;
  }
  if (key == "annulus") {
    if (!holes.empty()) throw std::invalid_argument("annulus cannot take extra holes");
    const double inner = positive(body, "inner");
    const double outer = positive(body, "outer");
    if (inner >= outer) throw std::invalid_argument("annulus needs inner < outer");
    return Domain::annulus(center_of(body), inner, outer, label);
  }
  if (key == "disc" && holes.empty()) return Domain::disc(center_of(body), positive(body, "radius"), label);
  return Domain(curve_from(key, body), std::move(holes), label);
}

}  // namespace

Domain parse_domain(const json& spec) {
  try {
    return parse_impl(spec);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("domain description: ") + e.what());
  }
}

Domain load_domain(const std::string& path_or_fixture) {
  if (!std::filesystem::exists(path_or_fixture)) {
    const auto names = fixtures::names();
    if (std::find(names.begin(), names.end(), path_or_fixture) != names.end()) {
      return fixtures::by_name(path_or_fixture);
    }
    throw std::invalid_argument("no such domain file or fixture: " + path_or_fixture);
  }
  std::ifstream in(path_or_fixture);
  json spec;
  try {
    in >> spec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path_or_fixture + ": " + e.what());
  }
  return parse_domain(spec);
}

}  // namespace carath::harness
