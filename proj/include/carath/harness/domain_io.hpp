#pragma once

#include <string>

#include "json.hpp"

#include "carath/geometry/domain.hpp"

namespace carath::harness {

using geometry::Domain;

/// Builds a domain from its JSON description.
///
/// Exactly one primitive key:
///   {"disc": {"center": [x, y], "radius": r}}
///   {"ellipse": {"center": [x, y], "a": a, "b": b}}
///   {"fourier_blob": {"center": [x, y], "radius": r, "modes": [[k, amp, phase], ...]}}
///   {"samples": [[x, y], ...]}                      counterclockwise, >= 8 points
///   {"annulus": {"center": [x, y], "inner": r1, "outer": r2}}
///   {"fixture": "name"}                             see fixtures::names()
/// Optional keys: "label" (text) and "holes" (list of disc / ellipse /
/// fourier_blob / samples objects, each describing one hole boundary).
/// Throws std::invalid_argument on schema errors and GeometryError on
/// invalid geometry.
Domain parse_domain(const nlohmann::json& spec);

/// Reads a domain file. A name that is not an existing file but matches a
/// shipped fixture loads the fixture.
Domain load_domain(const std::string& path_or_fixture);

}  // namespace carath::harness
