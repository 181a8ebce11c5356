#pragma once

#include <string>

#include "engeltori/front.hpp"

namespace engeltori::io {

// Renders a valid front word as a standalone SVG document. Strands are cubic
// arcs; the under-strand at each crossing is broken by a halo so the
// over/under data survives the picture. Throws InvalidInputError for invalid
// fronts.
std::string render_front_svg(const knots::FrontWord& f);

}  // namespace engeltori::io
