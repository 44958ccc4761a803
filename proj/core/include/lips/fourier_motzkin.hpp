#pragma once

#include <cstddef>

#include "lips/polyhedron.hpp"

namespace lips {

/// Projects p along coordinate `var`; the result has dimension p.dim - 1 and
/// keeps the remaining coordinates in order. If an equality involves `var` it
/// is solved for `var` and substituted; otherwise inequalities are combined
/// pairwise. Rows are scaled by the magnitude of their leading coefficient
/// and exact duplicates dropped.
Polyhedron fm_eliminate(const Polyhedron& p, std::size_t var);

/// True iff a polyhedron of dimension 0 has no contradictory row.
bool ground_consistent(const Polyhedron& p);

/// Feasibility by eliminating every variable. Independent of the simplex code.
bool fm_feasible(const Polyhedron& p);

}  // namespace lips
