#pragma once

#include <string>

#include "canontl/tldiagram.hpp"

namespace canontl {

// character-grid picture: index rows top and bottom, arcs as right-angle
// cups/caps, through strands as (roughly) straight lines
std::string ascii_diagram(const TLDiagram& d);

// standalone SVG 1.1 document, semicircular arcs and straight strands
std::string svg_diagram(const TLDiagram& d);

}  // namespace canontl
