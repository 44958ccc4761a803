#include "lips/oracle.hpp"

#include <optional>
#include <random>

#include "lips/error.hpp"
#include "lips/fourier_motzkin.hpp"
#include "lips/membership.hpp"
#include "lips/polyhedron.hpp"

namespace lips {
namespace {

// Existential subsystem at fixed universal values, decided by elimination.
bool fm_existential(const ParametricSystem& sys, const std::vector<std::size_t>& exists,
                    const std::vector<std::size_t>& forall, const Vector& forall_values, const Vector& x) {
    Vector base = subtract(multiply(sys.a0, x), sys.b0);
    for (std::size_t j = 0; j < forall.size(); ++j) {
        const auto& p = sys.params[forall[j]];
        base = axpy(base, forall_values[j], subtract(multiply(p.a, x), p.b));
    }
    Polyhedron poly(exists.size());
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < exists.size(); ++j) {
        const auto& p = sys.params[exists[j]];
        cols.push_back(subtract(multiply(p.a, x), p.b));
        Vector e(exists.size());
        e[j] = 1;
        poly.add_inequality(e, p.range.hi());
        e[j] = -1;
        poly.add_inequality(e, -p.range.lo());
    }
    for (std::size_t i = 0; i < sys.m; ++i) {
        Vector row(exists.size());
        for (std::size_t j = 0; j < exists.size(); ++j) row[j] = cols[j][i];
        poly.add_equality(row, -base[i]);
    }
    return fm_feasible(poly);
}

}  // namespace

bool fm_member_oracle(const ParametricSystem& sys, const Vector& x) {
    sys.validate();
    if (x.size() != sys.n) throw InputError("point has wrong length");
    if (sys.num_params() > kMaxOracleParameters) {
        throw CapExceeded("fm_member_oracle limited to " + std::to_string(kMaxOracleParameters) + " parameters");
    }
    std::vector<std::size_t> all(sys.num_params());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return fm_existential(sys, all, {}, {}, x);
}

bool ae_vertex_oracle(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x) {
    sys.validate();
    quant.validate(sys.num_params());
    if (x.size() != sys.n) throw InputError("point has wrong length");
    if (quant.forall_set.size() > kMaxOracleParameters || quant.exists_set.size() > kMaxOracleParameters) {
        throw CapExceeded("ae_vertex_oracle limited to " + std::to_string(kMaxOracleParameters) +
                          " parameters per quantifier");
    }
    const std::size_t na = quant.forall_set.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << na); ++mask) {
        Vector values(na);
        for (std::size_t j = 0; j < na; ++j) {
            const auto& r = sys.params[quant.forall_set[j]].range;
            values[j] = (mask >> j) & 1u ? r.hi() : r.lo();
        }
        if (!fm_existential(sys, quant.exists_set, quant.forall_set, values, x)) return false;
    }
    return true;
}

std::vector<Vector> sample_solution_cloud(const ParametricSystem& sys, std::size_t grid_per_param,
                                          std::uint64_t seed) {
    sys.validate();
    if (grid_per_param < 2) throw InputError("grid_per_param must be at least 2");
    const std::size_t k = sys.num_params();
    constexpr std::size_t kMaxCells = 4096;

    auto grid_value = [&](std::size_t param, std::size_t idx) {
        const auto& r = sys.params[param].range;
        return Rational(r.lo() + (r.hi() - r.lo()) * ratio(static_cast<long>(idx), static_cast<long>(grid_per_param - 1)));
    };

    std::size_t cells = 1;
    bool overflow = false;
    for (std::size_t j = 0; j < k; ++j) {
        if (cells > kMaxCells / grid_per_param) overflow = true;
        cells *= grid_per_param;
    }

    std::vector<std::vector<std::size_t>> indices;
    if (!overflow && cells <= kMaxCells) {
        for (std::size_t c = 0; c < cells; ++c) {
            std::vector<std::size_t> idx(k);
            std::size_t rest = c;
            for (std::size_t j = k; j-- > 0;) {
                idx[j] = rest % grid_per_param;
                rest /= grid_per_param;
            }
            indices.push_back(std::move(idx));
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, grid_per_param - 1);
        for (std::size_t c = 0; c < kMaxCells; ++c) {
            std::vector<std::size_t> idx(k);
            for (auto& v : idx) v = pick(rng);
            indices.push_back(std::move(idx));
        }
    }

    std::vector<Vector> out;
    for (const auto& idx : indices) {
        Vector p(k);
        for (std::size_t j = 0; j < k; ++j) p[j] = grid_value(j, idx[j]);
        auto res = lin_solve(sys.matrix_at(p), sys.rhs_at(p));
        if (auto* u = std::get_if<UniqueSolution>(&res)) out.push_back(u->point);
    }
    return out;
}

RasterGrid rasterize(const ParametricSystem& sys, const QuantifierAssignment& quant, const RasterWindow& window,
                     std::size_t resolution, RasterSet set) {
    sys.validate();
    quant.validate(sys.num_params());
    if (sys.n != 2) throw InputError("rasterize requires n = 2, got n = " + std::to_string(sys.n));
    if (resolution < 2 || resolution > kMaxRasterResolution) {
        throw InputError("raster resolution must lie in [2, " + std::to_string(kMaxRasterResolution) + "]");
    }
    if (window.x1_lo > window.x1_hi || window.x2_lo > window.x2_hi) throw InputError("raster window bounds reversed");

    std::optional<TolerableSystem> tol;
    if (set == RasterSet::Tolerable) {
        tol = tolerable_view(sys, quant);
        if (!tol) throw PreconditionError("tolerable raster needs existential parameters on the right-hand side only");
    }

    RasterGrid grid;
    for (std::size_t i = 0; i < resolution; ++i) {
        const Rational t = ratio(static_cast<long>(i), static_cast<long>(resolution - 1));
        grid.x1.push_back(window.x1_lo + (window.x1_hi - window.x1_lo) * t);
        grid.x2.push_back(window.x2_lo + (window.x2_hi - window.x2_lo) * t);
    }
    const ParametricSystem hom = homogenized(sys);
    grid.member.reserve(resolution * resolution);
    for (const auto& x2 : grid.x2) {
        for (const auto& x1 : grid.x1) {
            const Vector x{x1, x2};
            bool in = false;
            switch (set) {
                case RasterSet::United: in = member_united(sys, x).member; break;
                case RasterSet::AE: in = member_ae(sys, quant, x).member; break;
                case RasterSet::Tolerable: in = member_tolerable(*tol, x).member; break;
                case RasterSet::Kernel: in = member_ae(hom, quant, x).member; break;
            }
            grid.member.push_back(in);
        }
    }
    return grid;
}

void write_raster_csv(const RasterGrid& grid, std::ostream& out) {
    out << "x1,x2,member\n";
    for (std::size_t r = 0; r < grid.x2.size(); ++r) {
        for (std::size_t c = 0; c < grid.x1.size(); ++c) {
            out << to_fraction_string(grid.x1[c]) << ',' << to_fraction_string(grid.x2[r]) << ','
                << (grid.at(r, c) ? 1 : 0) << '\n';
        }
    }
}

}  // namespace lips
