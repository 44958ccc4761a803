#pragma once

#include <cstddef>
#include <string>

#include "lips/linalg.hpp"

namespace lips {

/// { y in Q^dim : C y <= d, E y = f }
struct Polyhedron {
    std::size_t dim = 0;
    Matrix ineq;      // C
    Vector ineq_rhs;  // d
    Matrix eq;        // E
    Vector eq_rhs;    // f

    Polyhedron() = default;
    explicit Polyhedron(std::size_t dimension)
        : dim(dimension), ineq(0, dimension), eq(0, dimension) {}

    void add_inequality(const Vector& normal, const Rational& rhs);
    void add_equality(const Vector& normal, const Rational& rhs);
    /// lo <= y_var <= hi
    void add_bounds(std::size_t var, const Rational& lo, const Rational& hi);

    std::size_t num_inequalities() const { return ineq.rows(); }
    std::size_t num_equalities() const { return eq.rows(); }

    /// Throws InputError unless column and row counts are consistent.
    void validate() const;

    bool contains(const Vector& point) const;

    std::string describe() const;
};

/// Multipliers for the rows of a polyhedron: lambda >= 0 on inequalities,
/// mu free on equalities.
struct FarkasMultipliers {
    Vector ineq;
    Vector eq;
};

/// True iff lambda >= 0, lambda^T C + mu^T E = 0 and lambda^T d + mu^T f < 0,
/// i.e. the multipliers combine the rows into the contradiction 0 <= c, c < 0.
bool validate_farkas(const Polyhedron& p, const FarkasMultipliers& m);

/// The constant lambda^T d + mu^T f of the combined row.
Rational farkas_constant(const Polyhedron& p, const FarkasMultipliers& m);

/// { y : C y <= 0, E y = 0 }. Purely syntactic; it is the set of unbounded
/// directions only when p is nonempty.
Polyhedron recession_cone(const Polyhedron& p);

}  // namespace lips
