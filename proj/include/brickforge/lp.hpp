#pragma once

// Exact rational feasibility LP: phase-1 simplex with Bland's rule, so it
// terminates on every input. Everything the polyhedral kernel decides
// (vertex extremality, edge certificates) reduces to this.

#include "brickforge/numbers.hpp"

#include <optional>
#include <vector>

namespace brickforge {

// Is {x >= 0 : A x = b} nonempty?  Returns a witness when it is.
// A is given by rows; all rows must have equal length.
std::optional<QVec> lp_feasible_point(const std::vector<QVec>& a, const QVec& b);

// Convenience: is `point` a convex combination of `generators`?
bool in_convex_hull(const QVec& point, const std::vector<QVec>& generators);

// Does some linear functional satisfy f.u = f.v > f.w for all w in `others`?
bool has_edge_functional(const QVec& u, const QVec& v, const std::vector<QVec>& others);

}  // namespace brickforge
