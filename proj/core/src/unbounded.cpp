#include "lips/unbounded.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "lips/error.hpp"
#include "lips/lp.hpp"

namespace lips {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedYes: return "CERTIFIED_YES";
        case Verdict::CertifiedNo: return "CERTIFIED_NO";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::Thm2: return "THM2";
        case Rule::Thm3: return "THM3";
        case Rule::Thm5: return "THM5";
        case Rule::Thm6: return "THM6";
        case Rule::Prop1: return "PROP1";
        case Rule::Prop2: return "PROP2";
        case Rule::Thm7: return "THM7";
        case Rule::Probe: return "PROBE";
    }
    return "?";
}

namespace {

constexpr std::size_t kMaxJointLpVertices = 6;

// x with A(p^v) x - sum_E q^(v)_k b^(k) = b0 + sum_A p^v_k b^(k) for every
// universal vertex v, q^(v) in the existential box. Needs rhs-only
// existential parameters.
std::optional<Vector> joint_lp_member(const ParametricSystem& sys, const QuantifierAssignment& quant) {
    for (auto k : quant.exists_set) {
        if (!is_rhs_only(sys.params[k])) return std::nullopt;
    }
    if (quant.forall_set.size() > kMaxJointLpVertices) return std::nullopt;

    const auto vertices = universal_vertices(sys, quant);
    const std::size_t ne = quant.exists_set.size();
    const std::size_t dim = sys.n + vertices.size() * ne;
    Polyhedron poly(dim);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        Vector p = sys.midpoints();
        for (std::size_t j = 0; j < quant.forall_set.size(); ++j) p[quant.forall_set[j]] = vertices[v][j];
        for (auto k : quant.exists_set) p[k] = 0;
        const Matrix a = sys.matrix_at(p);
        const Vector b = sys.rhs_at(p);
        const std::size_t offset = sys.n + v * ne;
        for (std::size_t j = 0; j < ne; ++j) {
            const auto& range = sys.params[quant.exists_set[j]].range;
            poly.add_bounds(offset + j, range.lo(), range.hi());
        }
        for (std::size_t i = 0; i < sys.m; ++i) {
            Vector row(dim);
            for (std::size_t c = 0; c < sys.n; ++c) row[c] = a(i, c);
            for (std::size_t j = 0; j < ne; ++j) row[offset + j] = -sys.params[quant.exists_set[j]].b[i];
            poly.add_equality(row, b[i]);
        }
    }
    auto feas = lp_feasible(poly);
    const auto* f = std::get_if<Feasible>(&feas);
    if (f == nullptr) return std::nullopt;
    return Vector(f->point.begin(), f->point.begin() + static_cast<std::ptrdiff_t>(sys.n));
}

std::vector<Vector> candidate_parameters(const ParametricSystem& sys, std::size_t budget, std::uint64_t seed) {
    const std::size_t k = sys.num_params();
    std::vector<Vector> out;
    if (budget == 0) return out;

    auto vertex = [&](std::uint64_t mask) {
        Vector p(k);
        for (std::size_t j = 0; j < k; ++j) p[j] = (mask >> j) & 1u ? sys.params[j].range.hi() : sys.params[j].range.lo();
        return p;
    };

    std::mt19937_64 rng(seed);
    if (k < 63 && (std::uint64_t{1} << k) < budget) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) out.push_back(vertex(mask));
    } else {
        std::uniform_int_distribution<std::uint64_t> bits;
        while (out.size() < (budget + 1) / 2) out.push_back(vertex(bits(rng)));
    }
    out.push_back(sys.midpoints());
    constexpr int kGrid = 8;
    std::uniform_int_distribution<int> step(0, kGrid);
    while (out.size() < budget) {
        Vector p(k);
        for (std::size_t j = 0; j < k; ++j) {
            const auto& r = sys.params[j].range;
            p[j] = r.lo() + (r.hi() - r.lo()) * ratio(step(rng), kGrid);
        }
        out.push_back(std::move(p));
        if (k == 0) break;
    }
    return out;
}

std::optional<Vector> solve_at(const ParametricSystem& sys, const Vector& p) {
    auto res = lin_solve(sys.matrix_at(p), sys.rhs_at(p));
    if (auto* u = std::get_if<UniqueSolution>(&res)) return u->point;
    if (auto* a = std::get_if<AffineSolutionSet>(&res)) return a->particular;
    return std::nullopt;
}

bool is_member(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x) {
    return member_ae(sys, quant, x).member;
}

// R with x0 + alpha y a member for all alpha >= R / eps:
// R = ||A(mid)x0 - b(mid)||_1 + sum_k rad_k ||A^(k)x0 - b^(k)||_1.
Rational escape_constant(const ParametricSystem& sys, const Vector& x0) {
    const auto res = residual_vectors(sys, x0);
    Vector center = res[0];
    Rational spread = 0;
    for (std::size_t k = 0; k < sys.num_params(); ++k) {
        center = axpy(center, sys.params[k].range.mid(), res[k + 1]);
        for (const auto& v : res[k + 1]) spread += sys.params[k].range.rad() * abs(v);
    }
    Rational total = spread;
    for (const auto& v : center) total += abs(v);
    return total;
}

const ProbeReport* better_probe(const ProbeReport* best, const ProbeReport& cand) {
    if (best == nullptr) return &cand;
    if (best->exhausted) return best;
    if (cand.exhausted) return &cand;
    return *cand.first_exit > *best->first_exit ? &cand : best;
}

}  // namespace

std::vector<Vector> find_base_points(const ParametricSystem& sys, const QuantifierAssignment& quant,
                                     std::size_t budget, std::uint64_t seed) {
    sys.validate();
    quant.validate(sys.num_params());
    std::vector<Vector> out;
    auto push = [&](Vector x) {
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    };
    if (auto x = joint_lp_member(sys, quant)) {
        if (is_member(sys, quant, *x)) push(std::move(*x));
    }
    for (const auto& p : candidate_parameters(sys, budget, seed)) {
        auto x = solve_at(sys, p);
        if (!x) continue;
        if (std::find(out.begin(), out.end(), *x) != out.end()) continue;
        if (is_member(sys, quant, *x)) push(std::move(*x));
    }
    return out;
}

ProbeReport probe_ray(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x0,
                      const Vector& y, std::size_t max_doublings) {
    if (x0.size() != sys.n || y.size() != sys.n) throw InputError("probe_ray: vector length differs from n");
    if (!is_member(sys, quant, x0)) throw InputError("probe_ray: base point " + format_vector(x0) + " is not a member");
    ProbeReport report{x0, y, {}, std::nullopt, false};
    report.alphas_tested.push_back(0);
    Rational alpha = 1;
    for (std::size_t d = 0; d <= max_doublings; ++d, alpha *= 2) {
        report.alphas_tested.push_back(alpha);
        if (!is_member(sys, quant, axpy(x0, alpha, y))) {
            report.first_exit = alpha;
            return report;
        }
    }
    report.exhausted = true;
    return report;
}

UnboundedVerdict decide_unbounded(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& y,
                                  std::size_t budget, std::uint64_t seed, std::size_t max_doublings) {
    sys.validate();
    quant.validate(sys.num_params());
    const bool united = quant.is_united();
    UnboundedVerdict verdict;
    verdict.max_doublings = max_doublings;

    auto kernel = united ? member_kernel(sys, y) : member_ae_kernel(sys, quant, y);
    verdict.kernel = kernel.member;
    if (!kernel.member) {
        verdict.status = Verdict::CertifiedNo;
        verdict.rule = united ? Rule::Thm2 : Rule::Thm5;
        verdict.separator = std::move(kernel.certificate);
        return verdict;
    }

    const auto strict = strict_kernel_member_ae(sys, quant, y);
    verdict.strict = strict.interior;
    const auto bases = find_base_points(sys, quant, budget, seed);

    if (strict.interior && !bases.empty()) {
        const Vector& x0 = bases.front();
        Rational alpha_star = sys.m == 0 ? Rational(0) : Rational(escape_constant(sys, x0) / strict.eps);
        verdict.status = Verdict::CertifiedYes;
        verdict.rule = united ? Rule::Thm3 : Rule::Thm6;
        verdict.eps = strict.eps;
        verdict.alpha_star = alpha_star;
        verdict.base_point = axpy(x0, alpha_star, y);
        return verdict;
    }

    const SystemClass cls = classify(sys, quant);
    if (united && (cls.has(ClassFlag::Ordinary) || cls.has(ClassFlag::ClassC))) {
        try {
            const auto dec = cls.has(ClassFlag::Ordinary) ? orthant_decomposition(sys) : classC_decomposition(sys);
            for (const auto& piece : dec.pieces) {
                if (piece.nonempty && piece.kernel_piece.contains(y)) {
                    verdict.status = Verdict::CertifiedYes;
                    verdict.rule = dec.mode == DecompositionMode::Orthant ? Rule::Prop1 : Rule::Prop2;
                    verdict.piece_signs = piece.signs;
                    verdict.base_point = piece.solution_point;
                    return verdict;
                }
            }
        } catch (const CapExceeded&) {
            // too many pieces; fall through to the remaining rules
        }
    }

    if (cls.has(ClassFlag::TolerableForm) && !bases.empty()) {
        verdict.status = Verdict::CertifiedYes;
        verdict.rule = Rule::Thm7;
        verdict.base_point = bases.front();
        return verdict;
    }

    std::vector<ProbeReport> probes;
    probes.reserve(bases.size());
    for (const auto& x0 : bases) probes.push_back(probe_ray(sys, quant, x0, y, max_doublings));
    const ProbeReport* best = nullptr;
    for (const auto& p : probes) best = better_probe(best, p);
    verdict.status = Verdict::Unknown;
    verdict.rule = Rule::Probe;
    verdict.probes_run = probes.size();
    if (best != nullptr) verdict.probe = *best;
    return verdict;
}

UnboundedVerdict decide_unbounded_tolerable(const TolerableSystem& tsys, const Vector& y, std::size_t budget,
                                            std::uint64_t seed, std::size_t max_doublings) {
    const auto q = as_quantified(tsys);
    UnboundedVerdict verdict;
    verdict.max_doublings = max_doublings;
    verdict.kernel = kernel_tolerable(tsys, y);

    const auto bases = find_base_points(q.system, q.quantifiers, budget, seed);
    if (bases.empty()) {
        verdict.status = Verdict::Unknown;
        verdict.rule = Rule::Probe;
        return verdict;
    }
    if (verdict.kernel) {
        verdict.status = Verdict::CertifiedYes;
        verdict.rule = Rule::Thm7;
        verdict.base_point = bases.front();
        return verdict;
    }
    auto refutation = member_ae_kernel(q.system, q.quantifiers, y);
    if (refutation.member) throw Error("tolerable kernel test and AE kernel membership disagree");
    verdict.status = Verdict::CertifiedNo;
    verdict.rule = Rule::Thm5;
    verdict.separator = std::move(refutation.certificate);
    return verdict;
}

std::string describe(const UnboundedVerdict& v) {
    const std::string flags = std::string("kernel: ") + (v.kernel ? "yes" : "no") + "; strict: " + (v.strict ? "yes" : "no");
    const std::string head = to_string(v.status);
    switch (v.status) {
        case Verdict::CertifiedNo:
            return head + " by " + to_string(v.rule) + " (direction outside the kernel; separator w = " +
                   format_vector(v.separator->separator.w) + ")";
        case Verdict::CertifiedYes: {
            std::string detail;
            if (v.rule == Rule::Thm3 || v.rule == Rule::Thm6) {
                detail = "strict kernel eps = " + to_string(*v.eps) + ", alpha* = " + to_string(*v.alpha_star) + "; ";
            } else if (v.piece_signs) {
                detail = "piece " + format_signs(*v.piece_signs) + "; ";
            } else if (v.rule == Rule::Thm7) {
                detail = "tolerable kernel; ";
            }
            return head + " by " + to_string(v.rule) + " (" + detail + "base " + format_vector(*v.base_point) + ")";
        }
        case Verdict::Unknown:
            if (!v.probe) return head + " (no base point found; " + flags + ")";
            if (v.probe->exhausted) {
                return head + " (no exit through alpha = 2^" + std::to_string(v.max_doublings) + " from base " +
                       format_vector(v.probe->base_point) + "; " + flags + ")";
            }
            return head + " (all " + std::to_string(v.probes_run) + " probes exit, latest at alpha = " +
                   to_string(*v.probe->first_exit) + " from base " + format_vector(v.probe->base_point) + "; " +
                   flags + ")";
    }
    return head;
}

}  // namespace lips
