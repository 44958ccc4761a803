#include "lips/cones.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lips/error.hpp"
#include "lips/lp.hpp"

namespace lips {

IntervalSystem ordinary_form(const ParametricSystem& sys) {
    if (!classify(sys).has(ClassFlag::Ordinary)) throw PreconditionError("system is not an ordinary interval system");
    const ParametricSystem f = fold_thin_parameters(sys);
    IntervalSystem out{f.a0, Matrix(f.m, f.n), f.b0, Vector(f.m)};
    for (const auto& p : f.params) {
        out.mid_a = add(out.mid_a, scale(p.range.mid(), p.a));
        out.rad_a = add(out.rad_a, scale(p.range.rad(), abs(p.a)));
        out.mid_b = axpy(out.mid_b, p.range.mid(), p.b);
        out.rad_b = axpy(out.rad_b, p.range.rad(), abs(p.b));
    }
    return out;
}

bool oettli_prager_member(const ParametricSystem& sys, const Vector& x) {
    const IntervalSystem is = ordinary_form(sys);
    if (x.size() != sys.n) throw InputError("point has wrong length");
    const Vector lhs = abs(subtract(multiply(is.mid_a, x), is.mid_b));
    const Vector rhs = add(multiply(is.rad_a, abs(x)), is.rad_b);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] > rhs[i]) return false;
    }
    return true;
}

std::string format_signs(const SignVector& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s[i] > 0 ? "+1" : "-1";
    }
    return out + ")";
}

namespace {

// Sign vectors in lexicographic order with +1 < -1.
std::vector<SignVector> sign_vectors(std::size_t len) {
    std::vector<SignVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
        SignVector s(len);
        for (std::size_t i = 0; i < len; ++i) s[i] = (mask >> (len - 1 - i)) & 1u ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

void append_rows(Polyhedron& dst, const Polyhedron& src) {
    for (std::size_t i = 0; i < src.num_inequalities(); ++i) dst.add_inequality(src.ineq.row(i), src.ineq_rhs[i]);
    for (std::size_t i = 0; i < src.num_equalities(); ++i) dst.add_equality(src.eq.row(i), src.eq_rhs[i]);
}

// M_lo x <= upper, -M_hi x <= -lower, plus the region rows.
Polyhedron two_sided(const Matrix& m_lo, const Matrix& m_hi, const Vector& upper, const Vector& lower,
                     const Polyhedron& region) {
    Polyhedron p(m_lo.cols());
    for (std::size_t i = 0; i < m_lo.rows(); ++i) p.add_inequality(m_lo.row(i), upper[i]);
    for (std::size_t i = 0; i < m_hi.rows(); ++i) p.add_inequality(scale(Rational(-1), m_hi.row(i)), -lower[i]);
    append_rows(p, region);
    return p;
}

void mark_nonempty(Piece& piece) {
    auto feas = lp_feasible(piece.solution_piece);
    if (auto* f = std::get_if<Feasible>(&feas)) {
        piece.nonempty = true;
        piece.solution_point = f->point;
    }
}

}  // namespace

PieceDecomposition orthant_decomposition(const ParametricSystem& sys) {
    const IntervalSystem is = ordinary_form(sys);
    if (sys.n > kMaxSignDimension) {
        throw CapExceeded("orthant decomposition limited to n <= " + std::to_string(kMaxSignDimension));
    }
    const Vector upper = add(is.mid_b, is.rad_b);
    const Vector lower = subtract(is.mid_b, is.rad_b);
    const Vector zero(sys.m);

    PieceDecomposition out;
    out.mode = DecompositionMode::Orthant;
    for (auto& s : sign_vectors(sys.n)) {
        Piece piece;
        piece.region = Polyhedron(sys.n);
        Matrix rad_s = is.rad_a;  // Delta_A diag(s)
        for (std::size_t j = 0; j < sys.n; ++j) {
            Vector e(sys.n);
            e[j] = -s[j];
            piece.region.add_inequality(e, 0);
            for (std::size_t i = 0; i < sys.m; ++i) rad_s(i, j) *= s[j];
        }
        const Matrix lo = add(is.mid_a, scale(Rational(-1), rad_s));
        const Matrix hi = add(is.mid_a, rad_s);
        piece.solution_piece = two_sided(lo, hi, upper, lower, piece.region);
        piece.kernel_piece = two_sided(lo, hi, zero, zero, piece.region);
        piece.signs = std::move(s);
        mark_nonempty(piece);
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

PieceDecomposition classC_decomposition(const ParametricSystem& sys) {
    if (!classify(sys).has(ClassFlag::ClassC)) throw PreconditionError("system is not in class C");
    const ParametricSystem f = fold_thin_parameters(sys);

    PieceDecomposition out;
    out.mode = DecompositionMode::SignCone;
    // b(mid q) and sum_l rad q_l |d^(l)|
    Vector rhs_mid = f.b0;
    Vector rhs_rad(f.m);
    Matrix a_mid = f.a0;
    for (std::size_t k = 0; k < f.num_params(); ++k) {
        const auto& p = f.params[k];
        if (!p.a.is_zero()) {
            out.cone_parameters.push_back(k);
            a_mid = add(a_mid, scale(p.range.mid(), p.a));
        } else {
            rhs_mid = axpy(rhs_mid, p.range.mid(), p.b);
            rhs_rad = axpy(rhs_rad, p.range.rad(), abs(p.b));
        }
    }
    if (out.cone_parameters.size() > kMaxSignDimension) {
        throw CapExceeded("sign-cone decomposition limited to " + std::to_string(kMaxSignDimension) +
                          " matrix parameters");
    }
    const Vector upper = add(rhs_mid, rhs_rad);
    const Vector lower = subtract(rhs_mid, rhs_rad);
    const Vector zero(f.m);

    for (auto& s : sign_vectors(out.cone_parameters.size())) {
        Piece piece;
        piece.region = Polyhedron(f.n);
        Matrix spread(f.m, f.n);  // sum_k rad_k s_k A^(k)
        for (std::size_t c = 0; c < out.cone_parameters.size(); ++c) {
            const auto& p = f.params[out.cone_parameters[c]];
            for (std::size_t i = 0; i < f.m; ++i) {
                Vector r = p.a.row(i);
                if (is_zero(r)) continue;
                piece.region.add_inequality(scale(Rational(-s[c]), r), 0);
            }
            spread = add(spread, scale(p.range.rad() * s[c], p.a));
        }
        const Matrix lo = add(a_mid, scale(Rational(-1), spread));
        const Matrix hi = add(a_mid, spread);
        piece.solution_piece = two_sided(lo, hi, upper, lower, piece.region);
        piece.kernel_piece = two_sided(lo, hi, zero, zero, piece.region);
        piece.signs = std::move(s);
        mark_nonempty(piece);
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

bool implies_inequality(const Polyhedron& p, const Vector& normal, const Rational& rhs) {
    auto res = lp_maximize(p, normal);
    if (std::holds_alternative<Infeasible>(res)) return true;
    if (std::holds_alternative<Unbounded>(res)) return false;
    return std::get<Optimal>(res).value <= rhs;
}

namespace {

using NormalRow = std::pair<Vector, Rational>;

// Inequalities scaled by |leading coefficient|; each equality becomes two
// inequalities so the comparison ignores how a system spells its equalities.
std::set<NormalRow> normalized_rows(const Polyhedron& p) {
    std::set<NormalRow> rows;
    auto insert = [&](Vector v, Rational d) {
        auto lead = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
        if (lead == v.end()) {
            if (d >= 0) return;  // 0 <= nonnegative carries no information
            d = -1;
        } else {
            Rational s = abs(*lead);
            for (auto& c : v) c /= s;
            d /= s;
        }
        rows.emplace(std::move(v), std::move(d));
    };
    for (std::size_t i = 0; i < p.num_inequalities(); ++i) insert(p.ineq.row(i), p.ineq_rhs[i]);
    for (std::size_t i = 0; i < p.num_equalities(); ++i) {
        insert(p.eq.row(i), p.eq_rhs[i]);
        insert(scale(Rational(-1), p.eq.row(i)), -p.eq_rhs[i]);
    }
    return rows;
}

bool implies_all(const Polyhedron& from, const Polyhedron& to) {
    for (std::size_t i = 0; i < to.num_inequalities(); ++i) {
        if (!implies_inequality(from, to.ineq.row(i), to.ineq_rhs[i])) return false;
    }
    for (std::size_t i = 0; i < to.num_equalities(); ++i) {
        if (!implies_inequality(from, to.eq.row(i), to.eq_rhs[i])) return false;
        if (!implies_inequality(from, scale(Rational(-1), to.eq.row(i)), -to.eq_rhs[i])) return false;
    }
    return true;
}

}  // namespace

SetComparison compare_sets(const Polyhedron& a, const Polyhedron& b) {
    if (a.dim != b.dim) throw InputError("compare_sets: dimension mismatch");
    if (normalized_rows(a) == normalized_rows(b)) return {true, true};
    return {implies_all(a, b) && implies_all(b, a), false};
}

UnboundedEqualityReport special_class_unbounded_equality(const ParametricSystem& sys) {
    const SystemClass cls = classify(sys);
    UnboundedEqualityReport report;
    if (cls.has(ClassFlag::Ordinary)) {
        report.decomposition = orthant_decomposition(sys);
    } else if (cls.has(ClassFlag::ClassC)) {
        report.decomposition = classC_decomposition(sys);
    } else {
        throw PreconditionError("special_class_unbounded_equality requires an ORDINARY or CLASS_C system");
    }
    report.mode = report.decomposition.mode;
    report.verified = true;
    for (const auto& piece : report.decomposition.pieces) {
        PieceCheck check{piece.signs, piece.nonempty, {}};
        if (piece.nonempty) {
            report.sigma_empty = false;
            check.comparison = compare_sets(recession_cone(piece.solution_piece), piece.kernel_piece);
            if (!check.comparison.equal) report.verified = false;
        }
        report.pieces.push_back(std::move(check));
    }
    if (report.sigma_empty) report.verified = false;
    return report;
}

}  // namespace lips
