#pragma once

// The Robinson-Schensted correspondence (row insertion) and its inverse
// (reverse bumping from the highest Q-label downward).

#include "cellweb/perm.hpp"
#include "cellweb/tableau.hpp"

#include <utility>

namespace cellweb {

std::pair<StandardTableau, StandardTableau> rs(const Permutation& w);
Permutation rs_inverse(const StandardTableau& P, const StandardTableau& Q);

} // namespace cellweb
