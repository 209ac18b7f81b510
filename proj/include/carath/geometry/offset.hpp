#pragma once

#include "carath/geometry/domain.hpp"

namespace carath::geometry {

/// Offsets a positively oriented boundary curve by eps along its right-hand
/// normal. Left-turning corners get circular caps of radius eps; at
/// right-turning corners the two offset pieces are trimmed at their crossing.
ParamCurve offset_curve(const ParamCurve& curve, double eps);

/// eps-thickening: the outer boundary moves out by eps and every hole shrinks
/// by eps. Throws GeometryError if eps exceeds the reach of the boundary or
/// the connectivity would change.
Domain thicken(const Domain& domain, double eps);

}  // namespace carath::geometry
