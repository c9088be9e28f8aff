#pragma once

// Best-effort diagram export: DOT and SVG for webs (half-plane layout with
// boundary vertices pinned to the baseline) and SVG grids for tableaux.
// Layout is deterministic for a fixed input but not part of the correctness
// contract.

#include "cellweb/tableau.hpp"
#include "cellweb/web.hpp"

#include <string>

namespace cellweb {

std::string web_to_dot(const Web& w);
// annotate_depths labels every face with its depth (web_to_yamanouchi style)
std::string web_to_svg(const Web& w, bool annotate_depths = false);

std::string tableau_to_dot(const StandardTableau& t);
std::string tableau_to_svg(const StandardTableau& t);

} // namespace cellweb
