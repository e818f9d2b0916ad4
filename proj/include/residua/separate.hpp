#pragma once

/**
 * @file separate.hpp
 * @brief Separation of a point from a finitely generated subsemimodule, from
 *        the op-span of a family, and from a convex set.
 *
 * Convex sets are handled by lifting: C ⊂ K^n generated by points c is
 * turned into the subsemimodule V ⊂ K^{n+1} generated by the vectors (c, e).
 * A combination ⋁ (c_i, e) λ_i with ⋁ λ_i = μ invertible is (v μ, μ) for the
 * convex combination v = ⋁ c_i (λ_i μ⁻¹), so V is exactly span{(vλ, λ) : v ∈ C}
 * and x ∈ C iff (x, e) ∈ V. Projecting (x, e) onto V gives (y, ν) with
 *
 *     ν = ⋁_c (c\x ∧ e),   y = ⋁_c c (c\x ∧ e).
 *
 * The convex operations require a semifield instance (rmax or boolean).
 */

#include "residua/freemod.hpp"

#include <optional>

namespace residua {

struct SeparationCertificate {
    Vector projection;
    /// The orthogonality relations were verified on every generator.
    bool orthogonality_checked;
    /// x lies outside the (op-)span; equivalent to projection != x.
    bool separated;
};

/// Projects x onto span(W) and verifies w\P(x) = w\x on every generator.
SeparationCertificate separate_from_module(const GeneratingFamily& w, const Vector& x);

/// Op-side mirror: projects onto the op-span and verifies P(x)\w = x\w.
SeparationCertificate separate_dual(const GeneratingFamily& w, const Vector& x);

struct ConvexSeparation {
    Scalar nu;
    Vector y;
    /// (y, ν) in K^{n+1}.
    Vector lifted_projection;
    bool member;
    /// y ν⁻¹ when ν is invertible.
    std::optional<Vector> normalized;
};

/// Generators (c, e) of the lifted subsemimodule.
GeneratingFamily lift_convex(const GeneratingFamily& c);

ConvexSeparation separate_from_convex(const GeneratingFamily& c, const Vector& x);

/// Projection of x onto the convex hull of C, absent when ν is not invertible.
std::optional<Vector> convex_projection(const GeneratingFamily& c, const Vector& x);

/// {v : v\x_ref ∧ e ≤ v\y ∧ ν}. Since y ≤ x_ref and ν ≤ e the reverse
/// inequality always holds, so this is the equality region of the
/// separating relations.
class HalfSpace {
public:
    HalfSpace(Vector x_ref, Vector y, Scalar nu);

    const Vector& x_ref() const noexcept { return x_ref_; }
    const Vector& y() const noexcept { return y_; }
    const Scalar& nu() const noexcept { return nu_; }

    bool contains(const Vector& v) const;

private:
    Vector x_ref_;
    Vector y_;
    Scalar nu_;
};

/// Separating half-space of x from conv(C). Construction verifies that every
/// generator is inside and that x is outside whenever x ∉ conv(C).
HalfSpace halfspace(const GeneratingFamily& c, const Vector& x);
inline bool halfspace_contains(const HalfSpace& h, const Vector& v) { return h.contains(v); }

/// Some z ∈ {x, y} with x\z ≠ y\z, or nothing when x = y.
std::optional<Vector> points_separate(const Vector& x, const Vector& y);

} // namespace residua
