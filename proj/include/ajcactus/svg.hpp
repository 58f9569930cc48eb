#ifndef AJCACTUS_SVG_HPP_
#define AJCACTUS_SVG_HPP_

#include <string>

#include "ajcactus/affine_cactus.hpp"

namespace ajcactus {

// Renders the word as strands on a cylinder: the rectangle's left and right
// edges are identified, letters are stacked top to bottom at a fixed pitch,
// each letter's strands meet at a node and reverse, and strand segments that
// cross the seam are drawn dashed. Output is deterministic.
std::string render_cactus_svg(const CactusWord& w);

}  // namespace ajcactus

#endif  // AJCACTUS_SVG_HPP_
