#include "carath/harness/methods.hpp"

#include <stdexcept>

namespace carath::harness {

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::automatic;
  if (name == "szego") return Method::szego;
  if (name == "lp") return Method::lp;
  if (name == "closed") return Method::closed;
  throw std::invalid_argument("unknown method: " + name + " (auto, szego, lp, closed)");
}

std::string to_string(Method method) {
  switch (method) {
    case Method::automatic: return "auto";
    case Method::szego: return "szego";
    case Method::lp: return "lp";
    case Method::closed: return "closed";
  }
  return "unknown";
}

MetricEvaluator make_evaluator(std::shared_ptr<const Domain> domain, Method method, const MethodOptions& options) {
  switch (method) {
    case Method::closed: return kernels::closed_form_evaluator(std::move(domain));
    case Method::szego: return kernels::szego_evaluator(std::move(domain), options.szego);
    case Method::lp: return extremal::lp_evaluator(std::move(domain), options.lp);
    case Method::automatic: break;
  }
  if (kernels::has_closed_form_caratheodory(*domain)) return kernels::closed_form_evaluator(std::move(domain));
  const auto szego = kernels::szego_evaluator(domain, options.szego);
  const auto lp = extremal::lp_evaluator(domain, options.lp);
  return MetricEvaluator(kernels::MetricKind::szego, std::move(domain), [szego, lp](Complex z) {
    try {
      return szego(z);
    } catch (const NumericalError&) {
      return lp(z);
    }
  });
}

}  // namespace carath::harness
