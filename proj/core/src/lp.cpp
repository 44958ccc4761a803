#include "lips/lp.hpp"

#include <optional>
#include <utility>

#include "lips/error.hpp"

namespace lips {
namespace {

// Standard form of { Cy <= d, Ey = f } with y = y+ - y-:
//
//   sigma_i (C_i y+ - C_i y- + s_i) = sigma_i d_i     (inequality rows)
//   sigma_i (E_i y+ - E_i y-)       = sigma_i f_i     (equality rows)
//
// sigma_i = -1 when the rhs is negative so every rhs is >= 0. Inequality
// rows with sigma_i = +1 start with their slack basic, the others with their
// artificial; either way the starting basis is the identity, so the
// artificial block always holds B^{-1}. Column layout:
// [y+ | y- | slacks | artificials | rhs].
class Tableau {
public:
    explicit Tableau(const Polyhedron& p)
        : n_(p.dim),
          mi_(p.num_inequalities()),
          rows_(p.num_inequalities() + p.num_equalities()),
          cols_(2 * p.dim + p.num_inequalities() + rows_),
          t_(rows_, cols_ + 1),
          basis_(rows_),
          sigma_(rows_, 1) {
        for (std::size_t i = 0; i < rows_; ++i) {
            const bool is_ineq = i < mi_;
            const Rational& rhs = is_ineq ? p.ineq_rhs[i] : p.eq_rhs[i - mi_];
            sigma_[i] = rhs < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) {
                const Rational& a = is_ineq ? p.ineq(i, j) : p.eq(i - mi_, j);
                t_(i, j) = sigma_[i] * a;
                t_(i, n_ + j) = -sigma_[i] * a;
            }
            if (is_ineq) t_(i, 2 * n_ + i) = sigma_[i];
            t_(i, art_begin() + i) = 1;
            t_(i, cols_) = sigma_[i] * rhs;
            basis_[i] = is_ineq && sigma_[i] > 0 ? 2 * n_ + i : art_begin() + i;
        }
    }

    std::size_t art_begin() const { return 2 * n_ + mi_; }
    bool is_artificial(std::size_t col) const { return col >= art_begin(); }

    // Minimizes cost . z over the current feasible basis; columns with
    // allowed[j] == false never enter. Returns false when unbounded.
    bool minimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allowed[j]) continue;
                Rational rc = cost[j];
                for (std::size_t i = 0; i < rows_; ++i) {
                    if (t_(i, j) != 0) rc -= cost[basis_[i]] * t_(i, j);
                }
                if (rc < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) return true;

            const std::size_t e = *entering;
            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (t_(i, e) <= 0) continue;
                Rational ratio = t_(i, cols_) / t_(i, e);
                if (!leaving || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving) return false;
            pivot(*leaving, e);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / t_(r, c);
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (t_(r, j) != 0) t_(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || t_(i, c) == 0) continue;
            Rational f = t_(i, c);
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
            }
        }
        basis_[r] = c;
    }

    FeasibilityResult phase_one() {
        std::vector<Rational> cost(cols_, 0);
        for (std::size_t j = art_begin(); j < cols_; ++j) cost[j] = 1;
        // An artificial never re-enters once it has left the basis.
        std::vector<bool> allowed(cols_, true);
        for (std::size_t j = art_begin(); j < cols_; ++j) allowed[j] = false;
        minimize(cost, allowed);

        Rational infeasibility = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (is_artificial(basis_[i])) infeasibility += t_(i, cols_);
        }
        if (infeasibility > 0) return Infeasible{farkas_from_duals()};

        drive_out_artificials();
        return Feasible{point()};
    }

    OptimizationResult phase_two(const Vector& objective) {
        std::vector<Rational> cost(cols_, 0);
        for (std::size_t j = 0; j < n_; ++j) {
            cost[j] = -objective[j];
            cost[n_ + j] = objective[j];
        }
        std::vector<bool> allowed(cols_, true);
        for (std::size_t j = art_begin(); j < cols_; ++j) allowed[j] = false;
        if (!minimize(cost, allowed)) return Unbounded{};
        Vector y = point();
        return Optimal{dot(objective, y), std::move(y)};
    }

private:
    // y^T = c_B^T B^{-1}; B^{-1} sits in the artificial block because that
    // block started as the identity.
    FarkasMultipliers farkas_from_duals() const {
        Vector dual(rows_);
        for (std::size_t k = 0; k < rows_; ++k) {
            Rational s = 0;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (is_artificial(basis_[i])) s += t_(i, art_begin() + k);
            }
            dual[k] = s;
        }
        FarkasMultipliers m;
        m.ineq.resize(mi_);
        m.eq.resize(rows_ - mi_);
        for (std::size_t k = 0; k < rows_; ++k) {
            Rational mult = -sigma_[k] * dual[k];
            if (k < mi_) m.ineq[k] = mult;
            else m.eq[k - mi_] = mult;
        }
        return m;
    }

    // Artificials left basic at level zero are pivoted out where possible;
    // rows where that fails are redundant and keep their artificial at zero.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (std::size_t j = 0; j < art_begin(); ++j) {
                if (t_(i, j) != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    Vector point() const {
        Vector z(cols_);
        for (std::size_t i = 0; i < rows_; ++i) z[basis_[i]] = t_(i, cols_);
        Vector y(n_);
        for (std::size_t j = 0; j < n_; ++j) y[j] = z[j] - z[n_ + j];
        return y;
    }

    std::size_t n_;
    std::size_t mi_;
    std::size_t rows_;
    std::size_t cols_;
    Matrix t_;
    std::vector<std::size_t> basis_;
    std::vector<int> sigma_;
};

}  // namespace

FeasibilityResult lp_feasible(const Polyhedron& p) {
    p.validate();
    if (p.num_inequalities() + p.num_equalities() == 0) return Feasible{Vector(p.dim)};
    Tableau t(p);
    return t.phase_one();
}

OptimizationResult lp_maximize(const Polyhedron& p, const Vector& objective) {
    p.validate();
    if (objective.size() != p.dim) throw InputError("objective has wrong dimension");
    Tableau t(p);
    auto feas = t.phase_one();
    if (auto* inf = std::get_if<Infeasible>(&feas)) return std::move(*inf);
    return t.phase_two(objective);
}

}  // namespace lips
