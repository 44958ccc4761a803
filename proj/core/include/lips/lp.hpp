#pragma once

#include <variant>

#include "lips/polyhedron.hpp"

namespace lips {

struct Feasible {
    Vector point;
};

struct Infeasible {
    FarkasMultipliers farkas;
};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

/// Exact phase-1 simplex (Bland's rule). A feasible answer carries a point
/// satisfying every row exactly; an infeasible one carries multipliers that
/// pass validate_farkas. A polyhedron without rows is feasible at the origin.
FeasibilityResult lp_feasible(const Polyhedron& p);

struct Optimal {
    Rational value;
    Vector point;
};

struct Unbounded {};

using OptimizationResult = std::variant<Optimal, Unbounded, Infeasible>;

/// maximize objective . y over p, two-phase simplex with Bland's rule.
OptimizationResult lp_maximize(const Polyhedron& p, const Vector& objective);

}  // namespace lips
