#include "lips/membership.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "lips/error.hpp"
#include "lips/lp.hpp"

namespace lips {
namespace {

void check_length(const ParametricSystem& sys, const Vector& x) {
    if (x.size() != sys.n) {
        throw InputError("vector has length " + std::to_string(x.size()) + ", expected " + std::to_string(sys.n));
    }
}

// { p_E in box_E : sum_{k in E} p_k v^(k) = -v^(0) - sum_{k in A} vertex_k v^(k) }
Polyhedron existential_polyhedron(const ParametricSystem& sys, const QuantifierAssignment& quant,
                                  const std::vector<Vector>& residuals, const Vector& vertex) {
    const std::size_t ne = quant.exists_set.size();
    Polyhedron p(ne);
    for (std::size_t j = 0; j < ne; ++j) {
        const auto& range = sys.params[quant.exists_set[j]].range;
        p.add_bounds(j, range.lo(), range.hi());
    }
    for (std::size_t i = 0; i < sys.m; ++i) {
        Vector row(ne);
        for (std::size_t j = 0; j < ne; ++j) row[j] = residuals[quant.exists_set[j] + 1][i];
        Rational rhs = -residuals[0][i];
        for (std::size_t j = 0; j < quant.forall_set.size(); ++j) {
            rhs -= vertex[j] * residuals[quant.forall_set[j] + 1][i];
        }
        p.add_equality(row, rhs);
    }
    return p;
}

FarkasCertificate certificate_from(const FarkasMultipliers& m, std::size_t num_exists) {
    FarkasCertificate c;
    c.w = m.eq;
    c.u.resize(num_exists);
    c.v.resize(num_exists);
    for (std::size_t j = 0; j < num_exists; ++j) {
        // add_bounds emits the upper row, then the lower row.
        Rational u = m.ineq[2 * j];
        Rational v = m.ineq[2 * j + 1];
        Rational common = u < v ? u : v;
        c.u[j] = u - common;
        c.v[j] = v - common;
    }
    return c;
}

Vector full_parameter_vector(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& vertex,
                             const Vector& existential) {
    Vector p(sys.num_params());
    for (std::size_t j = 0; j < quant.forall_set.size(); ++j) p[quant.forall_set[j]] = vertex[j];
    for (std::size_t j = 0; j < quant.exists_set.size(); ++j) p[quant.exists_set[j]] = existential[j];
    return p;
}

}  // namespace

std::vector<Vector> universal_vertices(const ParametricSystem& sys, const QuantifierAssignment& quant) {
    const std::size_t na = quant.forall_set.size();
    if (na > kMaxUniversalParameters) {
        throw CapExceeded(std::to_string(na) + " universal parameters exceed the vertex enumeration cap of " +
                          std::to_string(kMaxUniversalParameters));
    }
    std::vector<Vector> out;
    out.reserve(std::size_t{1} << na);
    for (std::size_t mask = 0; mask < (std::size_t{1} << na); ++mask) {
        Vector v(na);
        for (std::size_t j = 0; j < na; ++j) {
            const auto& range = sys.params[quant.forall_set[j]].range;
            v[j] = (mask >> j) & 1u ? range.hi() : range.lo();
        }
        out.push_back(std::move(v));
    }
    return out;
}

MembershipResult member_ae(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x) {
    sys.validate();
    quant.validate(sys.num_params());
    check_length(sys, x);
    const auto residuals = residual_vectors(sys, x);

    MembershipResult result;
    result.member = true;
    result.certificate.kind = CertificateKind::Witness;
    for (const auto& vertex : universal_vertices(sys, quant)) {
        Polyhedron poly = existential_polyhedron(sys, quant, residuals, vertex);
        auto feas = lp_feasible(poly);
        if (auto* f = std::get_if<Feasible>(&feas)) {
            result.certificate.witnesses.push_back(full_parameter_vector(sys, quant, vertex, f->point));
            continue;
        }
        const auto& inf = std::get<Infeasible>(feas);
        result.member = false;
        result.certificate = Certificate{};
        result.certificate.kind = CertificateKind::Separator;
        result.certificate.separator = certificate_from(inf.farkas, quant.exists_set.size());
        result.certificate.failing_vertex = vertex;
        return result;
    }
    return result;
}

MembershipResult member_united(const ParametricSystem& sys, const Vector& x) {
    return member_ae(sys, QuantifierAssignment::all_existential(sys.num_params()), x);
}

MembershipResult member_kernel(const ParametricSystem& sys, const Vector& y) {
    return member_united(homogenized(sys), y);
}

MembershipResult member_ae_kernel(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& y) {
    return member_ae(homogenized(sys), quant, y);
}

MembershipResult member_tolerable(const TolerableSystem& tsys, const Vector& x) {
    auto q = as_quantified(tsys);
    return member_ae(q.system, q.quantifiers, x);
}

bool kernel_tolerable(const TolerableSystem& tsys, const Vector& y) {
    tsys.validate();
    const auto& sys = tsys.base;
    check_length(sys, y);
    if (!is_zero(multiply(sys.matrix_at(sys.midpoints()), y))) return false;
    for (const auto& p : sys.params) {
        if (p.range.rad() != 0 && !is_zero(multiply(p.a, y))) return false;
    }
    return true;
}

bool member_first_class(const ParametricSystem& sys, const Vector& x) {
    if (!classify(sys).has(ClassFlag::FirstClass)) {
        throw PreconditionError("member_first_class requires a first-class system");
    }
    check_length(sys, x);
    const auto residuals = residual_vectors(sys, x);
    Vector center = residuals[0];
    Vector bound(sys.m);
    for (std::size_t k = 0; k < sys.num_params(); ++k) {
        const auto& range = sys.params[k].range;
        center = axpy(center, range.mid(), residuals[k + 1]);
        bound = axpy(bound, range.rad(), abs(residuals[k + 1]));
    }
    for (std::size_t i = 0; i < sys.m; ++i) {
        if (abs(center[i]) > bound[i]) return false;
    }
    return true;
}

StrictKernelResult strict_kernel_member_ae(const ParametricSystem& sys, const QuantifierAssignment& quant,
                                           const Vector& y) {
    sys.validate();
    quant.validate(sys.num_params());
    check_length(sys, y);
    if (sys.m == 0) return {true, 0};

    // Generators g_k = A^(k) y, offset A0 y.
    const Vector offset = multiply(sys.a0, y);
    std::vector<Vector> gen;
    for (const auto& p : sys.params) gen.push_back(multiply(p.a, y));

    const std::size_t ne = quant.exists_set.size();
    std::optional<Rational> min_eps;
    for (const auto& vertex : universal_vertices(sys, quant)) {
        Vector center = offset;
        for (std::size_t j = 0; j < quant.forall_set.size(); ++j) center = axpy(center, vertex[j], gen[quant.forall_set[j]]);

        for (std::size_t i = 0; i < sys.m; ++i) {
            for (int s : {1, -1}) {
                // variables (p_E, eps): sum_E p_k g_k - s eps e_i = -center
                Polyhedron poly(ne + 1);
                for (std::size_t j = 0; j < ne; ++j) {
                    const auto& range = sys.params[quant.exists_set[j]].range;
                    poly.add_bounds(j, range.lo(), range.hi());
                }
                for (std::size_t r = 0; r < sys.m; ++r) {
                    Vector row(ne + 1);
                    for (std::size_t j = 0; j < ne; ++j) row[j] = gen[quant.exists_set[j]][r];
                    if (r == i) row[ne] = -s;
                    poly.add_equality(row, -center[r]);
                }
                Vector objective(ne + 1);
                objective[ne] = 1;
                auto res = lp_maximize(poly, objective);
                const auto* opt = std::get_if<Optimal>(&res);
                // eps is pinned by row i, so the LP is never unbounded; infeasible
                // means the line along e_i misses the zonotope.
                if (opt == nullptr) return {false, 0};
                if (!min_eps || opt->value < *min_eps) min_eps = opt->value;
            }
        }
    }
    if (!min_eps) return {true, 0};
    if (*min_eps <= 0) return {false, 0};
    return {true, *min_eps};
}

StrictKernelResult strict_kernel_member(const ParametricSystem& sys, const Vector& y) {
    return strict_kernel_member_ae(sys, QuantifierAssignment::all_existential(sys.num_params()), y);
}

bool validate_certificate(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x,
                          const Certificate& cert) {
    if (cert.kind != CertificateKind::Separator) {
        throw PreconditionError("validate_certificate expects a separator certificate");
    }
    quant.validate(sys.num_params());
    const Vector& w = cert.separator.w;
    if (w.size() != sys.m) return false;
    const auto residuals = residual_vectors(sys, x);

    Vector center = residuals[0];
    for (std::size_t k = 0; k < sys.num_params(); ++k) center = axpy(center, sys.params[k].range.mid(), residuals[k + 1]);
    const Rational lhs = dot(w, center);

    Rational rhs = 0;
    for (std::size_t k = 0; k < sys.num_params(); ++k) {
        Rational term = abs(dot(w, residuals[k + 1])) * sys.params[k].range.rad();
        if (quant.is_universal(k)) rhs -= term;
        else rhs += term;
    }
    return lhs > rhs;
}

bool validate_witness(const ParametricSystem& sys, const Vector& x, const Certificate& cert) {
    if (cert.kind != CertificateKind::Witness || cert.witnesses.empty()) return false;
    for (const auto& p : cert.witnesses) {
        if (p.size() != sys.num_params()) return false;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (!sys.params[k].range.contains(p[k])) return false;
        }
        if (multiply(sys.matrix_at(p), x) != sys.rhs_at(p)) return false;
    }
    return true;
}

}  // namespace lips
