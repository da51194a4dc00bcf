#pragma once

#include <string>

#include "edcert/newton.hpp"

namespace edcert::cli {

// Static 640x480 SVG 1.1 plot of the points (i, v(a_i)) and their lower hull.
// Output depends only on the arguments.
std::string newton_svg(const FormalPoly& poly, const PAdic& v);

} // namespace edcert::cli
