#pragma once

/**
 * @file project.hpp
 * @brief Canonical projector onto a finitely generated complete subsemimodule.
 *
 * For V generated by W, the greatest element of V below x is
 *
 *     P_V(x) = ⋁_{w ∈ W} w (w\x),
 *
 * and membership x ∈ V is equivalent to P_V(x) = x, and also to
 * x\P_V(x) = x\x. Both tests are evaluated; a disagreement is reported as a
 * theorem_violation.
 */

#include "residua/freemod.hpp"

#include <vector>

namespace residua {

struct ProjectionResult {
    Vector projection;
    /// w\x for each generator, in generator order.
    std::vector<Scalar> coefficients;
    /// projection == x
    bool fixed;
};

ProjectionResult project(const GeneratingFamily& w, const Vector& x);

bool is_member(const GeneratingFamily& w, const Vector& x);

/// Projection onto the subsemimodule of X^op generated by W (closed under
/// finite meets and x ↦ x/λ): the least element of that set above x,
/// ⋀_w w/(x\w). The empty family yields the all-top vector.
Vector project_dual(const GeneratingFamily& w, const Vector& x);

struct DominatingMeet {
    /// Q_V(x) = ⋀{v ∈ V : v ≥ x}
    Vector value;
    /// Whether Q_V(x) itself lies in V.
    bool member;
};

/// Q_V(x) over rmax for a family without +inf entries.
///
/// Every v = A⊗t ≥ x dominates some A⊗t_σ, where σ assigns each coordinate k
/// with x_k > -inf to a generator j able to reach it (A_kj finite) and t_σ is
/// the least coefficient vector satisfying those assignments. The meet is
/// therefore taken over finitely many t_σ, enumerated depth-first with
/// already-covered coordinates skipped.
DominatingMeet qv_inf(const GeneratingFamily& w, const Vector& x);

} // namespace residua
