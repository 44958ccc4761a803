#pragma once

#include <cstddef>
#include <vector>

#include "lips/model.hpp"

namespace lips {

/// Dual solution of the existential parameter system at one universal
/// vertex: u_k - v_k + w^T(A^(k)x - b^(k)) = 0 for k in K^exists, with
/// u, v >= 0 and u_k v_k = 0. u and v are aligned with
/// QuantifierAssignment::exists_set.
struct FarkasCertificate {
    Vector w;
    Vector u;
    Vector v;
};

enum class CertificateKind { Witness, Separator };

struct Certificate {
    CertificateKind kind = CertificateKind::Witness;
    /// Witness: full parameter vectors solving A(p)x = b(p). One for the
    /// united set, one per universal vertex for AE sets.
    std::vector<Vector> witnesses;
    /// Separator: w violating the characterization inequality.
    FarkasCertificate separator;
    /// Separator: universal parameter values (aligned with forall_set) at
    /// which no existential completion exists.
    Vector failing_vertex;

    const Vector& witness_p() const { return witnesses.front(); }
};

struct MembershipResult {
    bool member = false;
    Certificate certificate;
};

/// x in the united solution set, decided by LP feasibility of
/// { p in box : sum_k p_k v^(k) = -v^(0) }.
MembershipResult member_united(const ParametricSystem& sys, const Vector& x);

/// y in the united kernel { y : A(p) y = 0 for some p in the box }.
MembershipResult member_kernel(const ParametricSystem& sys, const Vector& y);

/// Maximum number of universal parameters for vertex enumeration.
inline constexpr std::size_t kMaxUniversalParameters = 20;

/// x in the AE solution set. Every vertex of the universal sub-box must admit
/// an existential completion; the admissible universal values form a convex
/// set, so vertices suffice. Throws CapExceeded beyond kMaxUniversalParameters.
MembershipResult member_ae(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x);

/// member_ae on the homogenized system.
MembershipResult member_ae_kernel(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& y);

MembershipResult member_tolerable(const TolerableSystem& tsys, const Vector& x);

/// A(p) y = 0 for every p in the box: A(mid p) y = 0 and rad_k A^(k) y = 0.
bool kernel_tolerable(const TolerableSystem& tsys, const Vector& y);

/// Direct evaluation of |A(mid)x - b(mid)| <= sum_k rad_k |A^(k)x - b^(k)|.
/// Throws PreconditionError unless the system is FIRST_CLASS.
bool member_first_class(const ParametricSystem& sys, const Vector& x);

struct StrictKernelResult {
    bool interior = false;
    /// Largest eps with +-eps e_i attainable in every coordinate direction
    /// (minimum over directions and universal vertices); 0 when some
    /// direction is unattainable or m = 0.
    Rational eps = 0;
};

/// 0 in the interior of Z(y) = { A(p) y : p in box }, by 2m LPs.
StrictKernelResult strict_kernel_member(const ParametricSystem& sys, const Vector& y);

/// AE version: A(mid)y + Z_forall(y) + eps B_1 is contained in Z_exists(y),
/// tested at every universal vertex. Equals the strict form of the AE
/// characterization inequality holding for every w != 0.
StrictKernelResult strict_kernel_member_ae(const ParametricSystem& sys, const QuantifierAssignment& quant,
                                           const Vector& y);

/// Exact check that the separator w satisfies
///   w^T(A(mid)x - b(mid)) > sum_{K exists} |w^T v^(k)| rad_k - sum_{K forall} |w^T v^(k)| rad_k.
/// Throws PreconditionError for a witness certificate.
bool validate_certificate(const ParametricSystem& sys, const QuantifierAssignment& quant, const Vector& x,
                          const Certificate& cert);

/// Every witness lies in the box, agrees with its universal vertex pattern,
/// and solves A(p)x = b(p) exactly.
bool validate_witness(const ParametricSystem& sys, const Vector& x, const Certificate& cert);

/// Visits the vertices of the universal sub-box in a fixed order (bit j of
/// the counter selects hi for forall_set[j]).
std::vector<Vector> universal_vertices(const ParametricSystem& sys, const QuantifierAssignment& quant);

}  // namespace lips
