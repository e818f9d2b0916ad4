#pragma once

/**
 * @file dual.hpp
 * @brief Dual pairs, conjugations and linear forms over free semimodules.
 *
 * A pair (Y, X) with a bracket ⟨y, x⟩ and a distinguished φ gives the
 * conjugations
 *
 *     x° = top{y : ⟨y, x⟩ ≤ φ},     °y = top{x : ⟨y, x⟩ ≤ φ}.
 *
 * Three brackets are provided. Canonical and matrix brackets take values in
 * K. The opposite bracket ⟨y, x⟩ = x\y pairs X with X^op and takes values in
 * K^op, so the order on both Y and the codomain is reversed there; use
 * DualPairConfig::y_leq when comparing conjugates.
 */

#include "residua/freemod.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace residua {

enum class BracketKind { canonical, matrix, opposite };

class DualPairConfig {
public:
    /// ⟨a, b⟩ = ⋁_i a_i b_i
    static DualPairConfig canonical(Phi phi);
    /// ⟨y, x⟩ = y A x with y ∈ K^{1×n}, x ∈ K^{p×1}
    static DualPairConfig matrix_bracket(Matrix a, Phi phi);
    /// ⟨y, x⟩ = x\y with y ∈ X^op
    static DualPairConfig opposite(Phi phi);

    BracketKind kind() const noexcept { return kind_; }
    const Phi& phi() const noexcept { return phi_; }
    SemiringId semiring() const noexcept { return phi_.semiring(); }
    /// Only for matrix brackets.
    const Matrix& matrix() const;

    Scalar bracket(const CoVector& y, const Vector& x) const;
    /// Order on Y (reversed for the opposite pair).
    bool y_leq(const CoVector& a, const CoVector& b) const;

    void require_x(const Vector& x) const;
    void require_y(const CoVector& y) const;

private:
    DualPairConfig(BracketKind kind, Phi phi, std::optional<Matrix> a)
        : kind_(kind), phi_(std::move(phi)), a_(std::move(a)) {}

    BracketKind kind_;
    Phi phi_;
    std::optional<Matrix> a_;
};

/// x°
CoVector conj_left(const DualPairConfig& cfg, const Vector& x);
/// °y
Vector conj_right(const DualPairConfig& cfg, const CoVector& y);
/// °(x°) = x
bool is_closed(const DualPairConfig& cfg, const Vector& x);

/// φ/(λ\φ) = λ and (φ/λ)\φ = λ for every sample.
bool check_reflexive(SemiringId sr, const Phi& phi, const std::vector<Scalar>& samples);

/// (K, φ) admits Riesz representation: rmax with invertible φ, boolean with
/// φ = eps, or matrix:n with φ_nn built from a finite diagonal.
bool is_reflexive_instance(const Phi& phi);

/// ℓx(y) = φ/(y\x)
Scalar riesz_eval(const Vector& x, const Phi& phi, const Vector& y);

/// The representer x of the form with f(δ_i) = f_on_basis[i]: x_i = f(δ_i)\φ.
Vector riesz_represent(const std::vector<Scalar>& f_on_basis, const Phi& phi);

class LinearForm {
public:
    LinearForm(Vector representer, Phi phi);

    const Vector& representer() const noexcept { return representer_; }
    const Phi& phi() const noexcept { return phi_; }
    Scalar operator()(const Vector& y) const { return riesz_eval(representer_, phi_, y); }

private:
    Vector representer_;
    Phi phi_;
};

struct FormExtension {
    Vector representer;
    LinearForm form;
};

/// Extends f, given by its values on the generators of V = span(W), to the
/// whole space. The representer is ⋁_w w (f(w)\φ), the top of
/// {u ∈ V : f(u) ≤ φ}. Throws input_error when the values are not those of a
/// linear continuous form on V.
FormExtension extend_form(const GeneratingFamily& w, const std::vector<Scalar>& values, const Phi& phi);

/// ⟨y, x⟩ = x\y, valued in K^op.
Scalar opposite_bracket(const Vector& x, const Vector& y);

struct LatticeReport {
    /// R(A) = {yA}, sorted lexicographically.
    std::vector<CoVector> row_space;
    /// C(A) = {Ax}, sorted lexicographically.
    std::vector<Vector> col_space;
    /// (z, A(z\φ)) for every z in the row space.
    std::vector<std::pair<CoVector, Vector>> iso_pairs;
    bool order_reversing;
    bool bijective;
    /// image(z ⊕ z') equals the meet of the images inside C(A).
    bool joins_to_meets;
};

/// Exhaustive row/column space report for a boolean matrix with at most
/// `cap` rows and columns.
LatticeReport rowcol_report(const Matrix& a, const Phi& phi, std::size_t cap = 6);

/// z ↦ A(z\φ), the map from the row space onto the column space.
Vector rowcol_image(const Matrix& a, const Phi& phi, const CoVector& z);

} // namespace residua
