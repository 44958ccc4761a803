#include "lips/polyhedron.hpp"

#include "lips/error.hpp"

namespace lips {

void Polyhedron::add_inequality(const Vector& normal, const Rational& rhs) {
    if (normal.size() != dim) throw InputError("inequality normal has wrong dimension");
    ineq.append_row(normal);
    ineq_rhs.push_back(rhs);
}

void Polyhedron::add_equality(const Vector& normal, const Rational& rhs) {
    if (normal.size() != dim) throw InputError("equality normal has wrong dimension");
    eq.append_row(normal);
    eq_rhs.push_back(rhs);
}

void Polyhedron::add_bounds(std::size_t var, const Rational& lo, const Rational& hi) {
    Vector e(dim);
    e[var] = 1;
    add_inequality(e, hi);
    e[var] = -1;
    add_inequality(e, -lo);
}

void Polyhedron::validate() const {
    if (ineq.cols() != dim || eq.cols() != dim) throw InputError("polyhedron column count differs from dim");
    if (ineq.rows() != ineq_rhs.size()) throw InputError("polyhedron inequality rhs length mismatch");
    if (eq.rows() != eq_rhs.size()) throw InputError("polyhedron equality rhs length mismatch");
}

bool Polyhedron::contains(const Vector& point) const {
    if (point.size() != dim) throw InputError("point has wrong dimension");
    Vector lhs = multiply(ineq, point);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] > ineq_rhs[i]) return false;
    }
    Vector elhs = multiply(eq, point);
    for (std::size_t i = 0; i < elhs.size(); ++i) {
        if (elhs[i] != eq_rhs[i]) return false;
    }
    return true;
}

std::string Polyhedron::describe() const {
    std::string s;
    for (std::size_t i = 0; i < ineq.rows(); ++i) {
        s += format_vector(ineq.row(i)) + ".y <= " + to_string(ineq_rhs[i]) + "\n";
    }
    for (std::size_t i = 0; i < eq.rows(); ++i) {
        s += format_vector(eq.row(i)) + ".y = " + to_string(eq_rhs[i]) + "\n";
    }
    return s;
}

Rational farkas_constant(const Polyhedron& p, const FarkasMultipliers& m) {
    return dot(m.ineq, p.ineq_rhs) + dot(m.eq, p.eq_rhs);
}

bool validate_farkas(const Polyhedron& p, const FarkasMultipliers& m) {
    if (m.ineq.size() != p.num_inequalities() || m.eq.size() != p.num_equalities()) return false;
    for (const auto& l : m.ineq) {
        if (l < 0) return false;
    }
    for (std::size_t j = 0; j < p.dim; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < p.num_inequalities(); ++i) s += m.ineq[i] * p.ineq(i, j);
        for (std::size_t i = 0; i < p.num_equalities(); ++i) s += m.eq[i] * p.eq(i, j);
        if (s != 0) return false;
    }
    return farkas_constant(p, m) < 0;
}

Polyhedron recession_cone(const Polyhedron& p) {
    Polyhedron r = p;
    for (auto& d : r.ineq_rhs) d = 0;
    for (auto& f : r.eq_rhs) f = 0;
    return r;
}

}  // namespace lips
