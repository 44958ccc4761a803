#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lips/cones.hpp"
#include "lips/membership.hpp"

namespace lips {

/// Membership along x0 + alpha y for alpha = 0, 1, 2, 4, ..., 2^max_doublings.
struct ProbeReport {
    Vector base_point;
    Vector direction;
    std::vector<Rational> alphas_tested;  // strictly increasing, starts at 0
    std::optional<Rational> first_exit;
    bool exhausted = false;  // every scheduled alpha passed
};

enum class Verdict { CertifiedYes, CertifiedNo, Unknown };

/// Which result justified the verdict. Thm2/Thm5: unbounded directions lie in
/// the (AE) kernel. Thm3/Thm6: strict kernel points are unbounded directions
/// once the set is nonempty. Prop1/Prop2: piecewise recession cones of
/// ordinary and class-C systems. Thm7: tolerable kernel equals the set of
/// unbounded directions. Probe: no certificate, ray probing only.
enum class Rule { Thm2, Thm3, Thm5, Thm6, Prop1, Prop2, Thm7, Probe };

std::string to_string(Verdict v);
std::string to_string(Rule r);

struct UnboundedVerdict {
    Verdict status = Verdict::Unknown;
    Rule rule = Rule::Probe;

    /// CertifiedNo: refutation of kernel membership.
    std::optional<Certificate> separator;
    /// CertifiedYes: x0 with x0 + alpha y in the set for every alpha >= 0.
    std::optional<Vector> base_point;
    /// Thm3/Thm6: strictness margin and the shift alpha* applied to the found
    /// member to reach base_point.
    std::optional<Rational> eps;
    std::optional<Rational> alpha_star;
    /// Prop1/Prop2: the piece whose kernel part contains y.
    std::optional<SignVector> piece_signs;
    /// Unknown: the most favourable probe (a non-exiting one if any).
    std::optional<ProbeReport> probe;
    std::size_t probes_run = 0;
    std::size_t max_doublings = 20;

    bool kernel = false;
    bool strict = false;
};

inline constexpr std::size_t kDefaultDoublings = 20;
inline constexpr std::size_t kDefaultBudget = 64;

/// Members of the (AE) solution set obtained by solving A(p)x = b(p) at the
/// box vertices, the midpoint and seeded random box points (at most `budget`
/// parameter vectors). Tolerable-form quantifiers add an exact LP point
/// first. Deterministic for a given seed.
std::vector<Vector> find_base_points(const ParametricSystem& sys, const QuantifierAssignment& quant,
                                     std::size_t budget, std::uint64_t seed);

/// Throws InputError when x0 is not a member.
ProbeReport probe_ray(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x0,
                      const Vector& y, std::size_t max_doublings = kDefaultDoublings);

UnboundedVerdict decide_unbounded(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& y,
                                  std::size_t budget = kDefaultBudget, std::uint64_t seed = 0,
                                  std::size_t max_doublings = kDefaultDoublings);

UnboundedVerdict decide_unbounded_tolerable(const TolerableSystem& tsys, const Vector& y,
                                            std::size_t budget = kDefaultBudget, std::uint64_t seed = 0,
                                            std::size_t max_doublings = kDefaultDoublings);

/// One-line rendering used by the CLI.
std::string describe(const UnboundedVerdict& v);

}  // namespace lips
