#include "lips/model.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lips/error.hpp"

namespace lips {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw InputError("interval lower bound " + to_string(lo_) + " exceeds upper bound " + to_string(hi_));
}

ParametricSystem ParametricSystem::zero(std::size_t rows, std::size_t cols) {
    ParametricSystem s;
    s.m = rows;
    s.n = cols;
    s.a0 = Matrix(rows, cols);
    s.b0 = Vector(rows);
    return s;
}

Parameter& ParametricSystem::add_parameter(std::string name, Interval range) {
    params.push_back({std::move(name), std::move(range), Matrix(m, n), Vector(m)});
    return params.back();
}

void ParametricSystem::validate() const {
    if (a0.rows() != m || a0.cols() != n) throw InputError("constant matrix is not m x n");
    if (b0.size() != m) throw InputError("constant vector does not have length m");
    std::set<std::string> names;
    for (const auto& p : params) {
        if (p.a.rows() != m || p.a.cols() != n) throw InputError("matrix of parameter '" + p.name + "' is not m x n");
        if (p.b.size() != m) throw InputError("vector of parameter '" + p.name + "' does not have length m");
        if (!names.insert(p.name).second) throw InputError("duplicate parameter name '" + p.name + "'");
    }
}

Matrix ParametricSystem::matrix_at(const Vector& p) const {
    if (p.size() != params.size()) throw InputError("parameter vector has wrong length");
    Matrix a = a0;
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (p[k] == 0) continue;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (params[k].a(i, j) != 0) a(i, j) += p[k] * params[k].a(i, j);
            }
    }
    return a;
}

Vector ParametricSystem::rhs_at(const Vector& p) const {
    if (p.size() != params.size()) throw InputError("parameter vector has wrong length");
    Vector b = b0;
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (p[k] != 0) b = axpy(b, p[k], params[k].b);
    }
    return b;
}

Vector ParametricSystem::midpoints() const {
    Vector v;
    v.reserve(params.size());
    for (const auto& p : params) v.push_back(p.range.mid());
    return v;
}

Vector ParametricSystem::radii() const {
    Vector v;
    v.reserve(params.size());
    for (const auto& p : params) v.push_back(p.range.rad());
    return v;
}

std::vector<Vector> residual_vectors(const ParametricSystem& sys, const Vector& x) {
    if (x.size() != sys.n) throw InputError("point has length " + std::to_string(x.size()) + ", expected " + std::to_string(sys.n));
    std::vector<Vector> v;
    v.reserve(sys.params.size() + 1);
    v.push_back(subtract(multiply(sys.a0, x), sys.b0));
    for (const auto& p : sys.params) v.push_back(subtract(multiply(p.a, x), p.b));
    return v;
}

ParametricSystem homogenized(const ParametricSystem& sys) {
    ParametricSystem h = sys;
    for (auto& v : h.b0) v = 0;
    for (auto& p : h.params)
        for (auto& v : p.b) v = 0;
    return h;
}

ParametricSystem fold_thin_parameters(const ParametricSystem& sys) {
    ParametricSystem out = sys;
    out.params.clear();
    for (const auto& p : sys.params) {
        if (!p.range.thin()) {
            out.params.push_back(p);
            continue;
        }
        out.a0 = add(out.a0, scale(p.range.lo(), p.a));
        out.b0 = axpy(out.b0, p.range.lo(), p.b);
    }
    return out;
}

QuantifierAssignment QuantifierAssignment::all_existential(std::size_t num_params) {
    QuantifierAssignment q;
    for (std::size_t k = 0; k < num_params; ++k) q.exists_set.push_back(k);
    return q;
}

bool QuantifierAssignment::is_universal(std::size_t k) const {
    return std::binary_search(forall_set.begin(), forall_set.end(), k);
}

void QuantifierAssignment::validate(std::size_t num_params) const {
    std::vector<int> seen(num_params, 0);
    for (const auto* set : {&forall_set, &exists_set}) {
        if (!std::is_sorted(set->begin(), set->end())) throw InputError("quantifier index set not sorted");
        for (auto k : *set) {
            if (k >= num_params) throw InputError("quantifier index out of range");
            ++seen[k];
        }
    }
    for (int c : seen) {
        if (c != 1) throw InputError("quantifier sets do not partition the parameters");
    }
}

void TolerableSystem::validate() const {
    base.validate();
    std::set<std::string> names;
    for (const auto& p : base.params) names.insert(p.name);
    for (const auto& q : rhs_params) {
        if (q.d.size() != base.m) throw InputError("rhs generator of '" + q.name + "' does not have length m");
        if (!names.insert(q.name).second) throw InputError("duplicate parameter name '" + q.name + "'");
    }
}

QuantifiedSystem as_quantified(const TolerableSystem& tsys) {
    tsys.validate();
    QuantifiedSystem out{tsys.base, {}};
    for (std::size_t k = 0; k < tsys.base.params.size(); ++k) out.quantifiers.forall_set.push_back(k);
    for (const auto& q : tsys.rhs_params) {
        out.quantifiers.exists_set.push_back(out.system.params.size());
        auto& p = out.system.add_parameter(q.name, q.range);
        p.b = q.d;
    }
    return out;
}

bool is_rhs_only(const Parameter& p) { return p.a.is_zero(); }
bool is_matrix_only(const Parameter& p) { return is_zero(p.b); }

std::optional<TolerableSystem> tolerable_view(const ParametricSystem& sys, const QuantifierAssignment& quant) {
    quant.validate(sys.num_params());
    for (auto k : quant.exists_set) {
        if (!is_rhs_only(sys.params[k])) return std::nullopt;
    }
    TolerableSystem t;
    t.base = sys;
    t.base.params.clear();
    for (auto k : quant.forall_set) t.base.params.push_back(sys.params[k]);
    for (auto k : quant.exists_set) t.rhs_params.push_back({sys.params[k].name, sys.params[k].range, sys.params[k].b});
    return t;
}

namespace {

// Rows i where (A^(k) | b^(k)) has a nonzero entry.
std::vector<std::size_t> nonzero_rows(const Parameter& p) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < p.b.size(); ++i) {
        bool nz = p.b[i] != 0;
        for (std::size_t j = 0; !nz && j < p.a.cols(); ++j) nz = p.a(i, j) != 0;
        if (nz) rows.push_back(i);
    }
    return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> nonzero_positions(const Parameter& p) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    const std::size_t n = p.a.cols();
    for (std::size_t i = 0; i < p.b.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p.a(i, j) != 0) pos.emplace_back(i, j);
        }
        if (p.b[i] != 0) pos.emplace_back(i, n);
    }
    return pos;
}

}  // namespace

std::string SystemClass::to_string() const {
    static constexpr std::pair<ClassFlag, const char*> names[] = {
        {ClassFlag::Ordinary, "ORDINARY"},
        {ClassFlag::FirstClass, "FIRST_CLASS"},
        {ClassFlag::ClassC, "CLASS_C"},
        {ClassFlag::TolerableForm, "TOLERABLE_FORM"},
        {ClassFlag::General, "GENERAL"},
    };
    std::string s;
    for (const auto& [flag, name] : names) {
        if (!has(flag)) continue;
        if (!s.empty()) s += ',';
        s += name;
    }
    return s;
}

SystemClass classify(const ParametricSystem& sys, const std::optional<QuantifierAssignment>& quant) {
    sys.validate();
    const ParametricSystem folded = fold_thin_parameters(sys);
    SystemClass c;

    bool ordinary = true;
    bool first_class = true;
    bool class_c = true;
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (const auto& p : folded.params) {
        auto pos = nonzero_positions(p);
        if (pos.size() != 1 || !used.insert(pos.front()).second) ordinary = false;
        if (nonzero_rows(p).size() > 1) first_class = false;

        bool matrix_ok = is_matrix_only(p) && nonzero_rows(p).size() <= 1;
        std::size_t rhs_entries = 0;
        for (const auto& v : p.b) rhs_entries += v != 0;
        bool rhs_ok = is_rhs_only(p) && rhs_entries <= 1;
        if (!matrix_ok && !rhs_ok) class_c = false;
    }
    if (ordinary) c.set(ClassFlag::Ordinary);
    if (first_class) c.set(ClassFlag::FirstClass);
    if (class_c) c.set(ClassFlag::ClassC);

    if (quant) {
        quant->validate(sys.num_params());
        bool tolerable = true;
        for (auto k : quant->exists_set) {
            const auto& p = sys.params[k];
            if (!p.range.thin() && !is_rhs_only(p)) tolerable = false;
        }
        if (tolerable) c.set(ClassFlag::TolerableForm);
    }

    if (c.flags == 0) c.set(ClassFlag::General);
    return c;
}

}  // namespace lips
