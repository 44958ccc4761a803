#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lips/model.hpp"
#include "lips/polyhedron.hpp"

namespace lips {

/// Independent-coefficient reading of an ORDINARY system:
/// A in [mid_a - rad_a, mid_a + rad_a], b in [mid_b - rad_b, mid_b + rad_b].
struct IntervalSystem {
    Matrix mid_a;
    Matrix rad_a;
    Vector mid_b;
    Vector rad_b;
};

/// Throws PreconditionError unless classify() reports ORDINARY.
IntervalSystem ordinary_form(const ParametricSystem& sys);

/// Oettli-Prager: |A_c x - b_c| <= Delta_A |x| + Delta_b componentwise.
bool oettli_prager_member(const ParametricSystem& sys, const Vector& x);

/// Entries are +1 or -1.
using SignVector = std::vector<int>;

std::string format_signs(const SignVector& s);

enum class DecompositionMode { Orthant, SignCone };

struct Piece {
    SignVector signs;
    Polyhedron region;
    Polyhedron solution_piece;
    Polyhedron kernel_piece;
    bool nonempty = false;
    /// A point of solution_piece when nonempty.
    Vector solution_point;
};

struct PieceDecomposition {
    DecompositionMode mode = DecompositionMode::Orthant;
    /// SignCone mode: parameter indices (of the thin-folded system) whose
    /// signs the pieces fix.
    std::vector<std::size_t> cone_parameters;
    /// Ordered lexicographically with +1 before -1.
    std::vector<Piece> pieces;
};

inline constexpr std::size_t kMaxSignDimension = 16;

/// One piece per orthant diag(s) x >= 0. Requires ORDINARY and n <= 16.
PieceDecomposition orthant_decomposition(const ParametricSystem& sys);

/// One piece per sign pattern s_k A^(k) y >= 0 of the matrix parameters.
/// Requires CLASS_C and at most 16 matrix parameters.
PieceDecomposition classC_decomposition(const ParametricSystem& sys);

/// Set equality of two polyhedra: syntactic after row normalization, else
/// mutual implication of every row, checked by LP.
struct SetComparison {
    bool equal = false;
    bool syntactic = false;
};

SetComparison compare_sets(const Polyhedron& a, const Polyhedron& b);

/// True iff every point of p satisfies normal . y <= rhs.
bool implies_inequality(const Polyhedron& p, const Vector& normal, const Rational& rhs);

struct PieceCheck {
    SignVector signs;
    bool nonempty = false;
    SetComparison comparison;
};

struct UnboundedEqualityReport {
    DecompositionMode mode = DecompositionMode::Orthant;
    PieceDecomposition decomposition;
    std::vector<PieceCheck> pieces;
    /// Every solution piece empty: the hypothesis Sigma != {} fails.
    bool sigma_empty = true;
    /// recession_cone(solution_piece) == kernel_piece on every nonempty piece.
    bool verified = false;
};

/// Orthant mode for ORDINARY systems, sign-cone mode for CLASS_C.
UnboundedEqualityReport special_class_unbounded_equality(const ParametricSystem& sys);

}  // namespace lips
