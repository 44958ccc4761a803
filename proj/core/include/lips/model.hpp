#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lips/linalg.hpp"

namespace lips {

/// Closed interval [lo, hi]; midpoint and radius are derived on demand.
class Interval {
public:
    Interval() = default;
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    Rational rad() const { return (hi_ - lo_) / 2; }
    bool thin() const { return lo_ == hi_; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }

    bool operator==(const Interval&) const = default;

private:
    Rational lo_ = 0;
    Rational hi_ = 0;
};

struct Parameter {
    std::string name;
    Interval range;
    Matrix a;  // m x n generator A^(k)
    Vector b;  // m generator b^(k)
};

/// A(p) x = b(p) with A(p) = A0 + sum_k p_k A^(k), b(p) = b0 + sum_k p_k b^(k),
/// p_k ranging over params[k].range. The constant term behaves as a parameter
/// fixed at 1.
struct ParametricSystem {
    std::size_t m = 0;
    std::size_t n = 0;
    Matrix a0;
    Vector b0;
    std::vector<Parameter> params;

    static ParametricSystem zero(std::size_t rows, std::size_t cols);

    std::size_t num_params() const { return params.size(); }

    /// Throws InputError on inconsistent shapes or duplicate names.
    void validate() const;

    Matrix matrix_at(const Vector& p) const;
    Vector rhs_at(const Vector& p) const;
    Vector midpoints() const;
    Vector radii() const;

    Parameter& add_parameter(std::string name, Interval range);
};

/// v^(0) = A0 x - b0 followed by v^(k) = A^(k) x - b^(k) for k = 1..K.
std::vector<Vector> residual_vectors(const ParametricSystem& sys, const Vector& x);

/// Same system with b0 and every b^(k) set to zero.
ParametricSystem homogenized(const ParametricSystem& sys);

/// Thin parameters ([c, c]) moved into the constant term.
ParametricSystem fold_thin_parameters(const ParametricSystem& sys);

/// Partition of parameter indices into universally and existentially
/// quantified ones. Indices are kept sorted.
struct QuantifierAssignment {
    std::vector<std::size_t> forall_set;
    std::vector<std::size_t> exists_set;

    static QuantifierAssignment all_existential(std::size_t num_params);

    bool is_united() const { return forall_set.empty(); }
    bool is_universal(std::size_t k) const;
    void validate(std::size_t num_params) const;

    bool operator==(const QuantifierAssignment&) const = default;
};

struct RhsParameter {
    std::string name;
    Interval range;
    Vector d;
};

/// A(p) x = b(p) + sum_l q_l d^(l): every base parameter is universal, every
/// rhs parameter existential.
struct TolerableSystem {
    ParametricSystem base;
    std::vector<RhsParameter> rhs_params;

    void validate() const;
};

struct QuantifiedSystem {
    ParametricSystem system;
    QuantifierAssignment quantifiers;
};

/// Flattens a tolerable system: base parameters first (universal), then the
/// rhs parameters (existential, zero matrix generator).
QuantifiedSystem as_quantified(const TolerableSystem& tsys);

/// Tolerable reading of a quantified system when every existential parameter
/// touches the right-hand side only.
std::optional<TolerableSystem> tolerable_view(const ParametricSystem& sys, const QuantifierAssignment& quant);

enum class ClassFlag : unsigned {
    Ordinary = 1u << 0,
    FirstClass = 1u << 1,
    ClassC = 1u << 2,
    TolerableForm = 1u << 3,
    General = 1u << 4,
};

struct SystemClass {
    unsigned flags = 0;

    bool has(ClassFlag f) const { return (flags & static_cast<unsigned>(f)) != 0; }
    void set(ClassFlag f) { flags |= static_cast<unsigned>(f); }
    /// Comma separated, fixed order: "ORDINARY,FIRST_CLASS,CLASS_C".
    std::string to_string() const;
};

/// Structural classification after folding thin parameters. TOLERABLE_FORM is
/// only considered when a quantifier assignment is supplied.
SystemClass classify(const ParametricSystem& sys,
                     const std::optional<QuantifierAssignment>& quant = std::nullopt);

/// Whether parameter k only touches the right-hand side / only the matrix.
bool is_rhs_only(const Parameter& p);
bool is_matrix_only(const Parameter& p);

}  // namespace lips
