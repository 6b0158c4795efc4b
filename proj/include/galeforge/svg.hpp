#pragma once

#include <string>

#include "galeforge/diagram.hpp"

namespace galeforge {

// Deterministic SVG rendering: fixed viewport, filled black points, hollow
// white points, the black polygon outline, and labels. Byte-identical across
// runs for the same input.
std::string diagram_to_svg(const Diagram& x);

}  // namespace galeforge
