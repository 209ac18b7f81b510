#pragma once

#include <memory>
#include <string>

#include "carath/extremal/extremal.hpp"
#include "carath/kernels/evaluator.hpp"

namespace carath::harness {

using geometry::Domain;
using kernels::MetricEvaluator;

enum class Method { automatic, szego, lp, closed };

/// "auto", "szego", "lp" or "closed"; throws std::invalid_argument.
Method parse_method(const std::string& name);
std::string to_string(Method method);

struct MethodOptions {
  kernels::SzegoOptions szego;
  extremal::ExtremalParams lp;
};

/// Carathéodory evaluator for a domain.
///
/// automatic: closed form for discs and two-disc regions, otherwise Szegő
/// with the LP bound as fallback where a Szegő solve fails numerically.
/// closed throws std::invalid_argument when no closed form exists.
MetricEvaluator make_evaluator(std::shared_ptr<const Domain> domain, Method method, const MethodOptions& options = {});

}  // namespace carath::harness
