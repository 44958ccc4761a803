#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "lips/model.hpp"

namespace lips {

// Brute-force decision procedures built on Fourier-Motzkin elimination only,
// so that agreement with the simplex-based membership code is meaningful.

inline constexpr std::size_t kMaxOracleParameters = 12;

/// x in the united set by eliminating every parameter from
/// { p in box : sum_k p_k v^(k) = -v^(0) }. K <= 12.
bool fm_member_oracle(const ParametricSystem& sys, const Vector& x);

/// Universal vertices enumerated directly, existential system decided by
/// elimination. |K forall| <= 12, |K exists| <= 12.
bool ae_vertex_oracle(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x);

/// Unique solutions of A(p)x = b(p) over the uniform grid with
/// grid_per_param points per parameter (first parameter varies slowest).
/// Grids larger than 4096 cells are subsampled with `seed`.
std::vector<Vector> sample_solution_cloud(const ParametricSystem& sys, std::size_t grid_per_param,
                                          std::uint64_t seed);

enum class RasterSet { United, AE, Tolerable, Kernel };

struct RasterWindow {
    Rational x1_lo, x1_hi, x2_lo, x2_hi;
};

/// Row-major membership grid: rows follow x2 ascending, columns x1 ascending.
struct RasterGrid {
    Vector x1;
    Vector x2;
    std::vector<bool> member;  // index = row * x1.size() + col

    bool at(std::size_t row, std::size_t col) const { return member[row * x1.size() + col]; }
};

inline constexpr std::size_t kMaxRasterResolution = 512;

/// Exact membership at resolution x resolution rational grid points. n must be 2.
RasterGrid rasterize(const ParametricSystem& sys, const QuantifierAssignment& quant, const RasterWindow& window,
                     std::size_t resolution, RasterSet set);

/// CSV with header "x1,x2,member"; coordinates as num/den, member as 0/1.
void write_raster_csv(const RasterGrid& grid, std::ostream& out);

}  // namespace lips
