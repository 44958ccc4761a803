#include "lips/fourier_motzkin.hpp"

#include <set>
#include <utility>
#include <vector>

#include "lips/error.hpp"

namespace lips {
namespace {

struct Row {
    Vector normal;
    Rational rhs;

    bool operator<(const Row& o) const {
        if (normal != o.normal) return normal < o.normal;
        return rhs < o.rhs;
    }
};

Row normalized(Row r) {
    for (const auto& c : r.normal) {
        if (c != 0) {
            Rational s = abs(c);
            for (auto& x : r.normal) x /= s;
            r.rhs /= s;
            return r;
        }
    }
    // 0 <= c only matters through the sign of c.
    r.rhs = sign(r.rhs);
    return r;
}

// Equality rows are normalized to a positive leading coefficient so that
// duplicates differing by sign collapse.
Row normalized_equality(Row r) {
    r = normalized(std::move(r));
    for (const auto& c : r.normal) {
        if (c != 0) {
            if (c < 0) {
                for (auto& x : r.normal) x = -x;
                r.rhs = -r.rhs;
            }
            break;
        }
    }
    return r;
}

Vector drop_coordinate(const Vector& v, std::size_t var) {
    Vector r;
    r.reserve(v.size() - 1);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j != var) r.push_back(v[j]);
    }
    return r;
}

}  // namespace

Polyhedron fm_eliminate(const Polyhedron& p, std::size_t var) {
    p.validate();
    if (var >= p.dim) throw InputError("fm_eliminate: variable index out of range");

    std::vector<Row> ineqs;
    std::vector<Row> eqs;
    for (std::size_t i = 0; i < p.num_inequalities(); ++i) ineqs.push_back({p.ineq.row(i), p.ineq_rhs[i]});
    for (std::size_t i = 0; i < p.num_equalities(); ++i) eqs.push_back({p.eq.row(i), p.eq_rhs[i]});

    std::set<Row> out_ineqs;
    std::set<Row> out_eqs;

    std::size_t pivot = eqs.size();
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (eqs[i].normal[var] != 0) {
            pivot = i;
            break;
        }
    }

    if (pivot < eqs.size()) {
        // var = (f - sum_{j != var} e_j y_j) / e_var
        const Row& sub = eqs[pivot];
        auto substitute = [&](const Row& r) {
            Rational f = r.normal[var] / sub.normal[var];
            Row out{Vector(r.normal.size()), r.rhs - f * sub.rhs};
            for (std::size_t j = 0; j < r.normal.size(); ++j) out.normal[j] = r.normal[j] - f * sub.normal[j];
            out.normal = drop_coordinate(out.normal, var);
            return out;
        };
        for (const auto& r : ineqs) out_ineqs.insert(normalized(substitute(r)));
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i != pivot) out_eqs.insert(normalized_equality(substitute(eqs[i])));
        }
    } else {
        std::vector<const Row*> pos;
        std::vector<const Row*> neg;
        for (const auto& r : ineqs) {
            int s = sign(r.normal[var]);
            if (s > 0) pos.push_back(&r);
            else if (s < 0) neg.push_back(&r);
            else out_ineqs.insert(normalized({drop_coordinate(r.normal, var), r.rhs}));
        }
        for (const Row* a : pos) {
            for (const Row* b : neg) {
                Rational wa = -b->normal[var];
                Rational wb = a->normal[var];
                Row c{Vector(a->normal.size()), wa * a->rhs + wb * b->rhs};
                for (std::size_t j = 0; j < c.normal.size(); ++j) {
                    c.normal[j] = wa * a->normal[j] + wb * b->normal[j];
                }
                c.normal = drop_coordinate(c.normal, var);
                out_ineqs.insert(normalized(std::move(c)));
            }
        }
        for (const auto& r : eqs) out_eqs.insert(normalized_equality({drop_coordinate(r.normal, var), r.rhs}));
    }

    Polyhedron out(p.dim - 1);
    for (const auto& r : out_ineqs) out.add_inequality(r.normal, r.rhs);
    for (const auto& r : out_eqs) out.add_equality(r.normal, r.rhs);
    return out;
}

bool ground_consistent(const Polyhedron& p) {
    if (p.dim != 0) throw InputError("ground_consistent: polyhedron still has free variables");
    for (const auto& d : p.ineq_rhs) {
        if (d < 0) return false;
    }
    for (const auto& f : p.eq_rhs) {
        if (f != 0) return false;
    }
    return true;
}

bool fm_feasible(const Polyhedron& p) {
    Polyhedron cur = p;
    while (cur.dim > 0) {
        // Early exit on a visible contradiction among rows with zero normal.
        for (std::size_t i = 0; i < cur.num_inequalities(); ++i) {
            if (is_zero(cur.ineq.row(i)) && cur.ineq_rhs[i] < 0) return false;
        }
        for (std::size_t i = 0; i < cur.num_equalities(); ++i) {
            if (is_zero(cur.eq.row(i)) && cur.eq_rhs[i] != 0) return false;
        }
        cur = fm_eliminate(cur, cur.dim - 1);
    }
    return ground_consistent(cur);
}

}  // namespace lips
