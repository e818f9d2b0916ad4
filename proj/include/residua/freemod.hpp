#pragma once

/**
 * @file freemod.hpp
 * @brief Finite free semimodules K^n: vectors, covectors, matrices and their
 *        residuation.
 *
 * Column vectors form a right K-semimodule (action x ↦ xλ), row covectors a
 * left one (y ↦ λy). The order is entrywise and every supremum below is a
 * finite fold.
 */

#include "residua/scalar.hpp"

#include <cstddef>
#include <vector>

namespace residua {

enum class Orientation { column, row };

template <Orientation O>
class BasicVector {
public:
    /// Requires at least one entry, all tagged with `sr`.
    BasicVector(SemiringId sr, std::vector<Scalar> entries);

    static BasicVector filled(SemiringId sr, std::size_t n, const Scalar& value) {
        return BasicVector(sr, std::vector<Scalar>(n, value));
    }
    static BasicVector bottom(SemiringId sr, std::size_t n) { return filled(sr, n, Scalar::bottom(sr)); }
    static BasicVector top(SemiringId sr, std::size_t n) { return filled(sr, n, Scalar::top(sr)); }
    /// Canonical basis vector δ_i (e at i, eps elsewhere).
    static BasicVector basis(SemiringId sr, std::size_t n, std::size_t i);

    SemiringId semiring() const noexcept { return sr_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Scalar>& entries() const noexcept { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const BasicVector&, const BasicVector&) = default;

private:
    SemiringId sr_;
    std::vector<Scalar> entries_;
};

using Vector = BasicVector<Orientation::column>;
using CoVector = BasicVector<Orientation::row>;

extern template class BasicVector<Orientation::column>;
extern template class BasicVector<Orientation::row>;

/// Lexicographic order on entries, used for deterministic sorting.
template <Orientation O>
bool lex_less(const BasicVector<O>& x, const BasicVector<O>& y) {
    const std::size_t n = x.size() < y.size() ? x.size() : y.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto c = canonical_compare(x[i], y[i]); c != 0) {
            return c < 0;
        }
    }
    return x.size() < y.size();
}

/// Same entries, other orientation.
CoVector transpose(const Vector& x);
Vector transpose(const CoVector& y);

template <Orientation O>
BasicVector<O> vjoin(const BasicVector<O>& x, const BasicVector<O>& y);
template <Orientation O>
BasicVector<O> vmeet(const BasicVector<O>& x, const BasicVector<O>& y);
/// Entrywise natural order.
template <Orientation O>
bool leq(const BasicVector<O>& x, const BasicVector<O>& y);

/// Right action xλ.
Vector act(const Vector& x, const Scalar& lambda);
/// Left action λy.
CoVector act(const Scalar& lambda, const CoVector& y);

/// x\y = ⋀_i x_i\y_i, the greatest λ with xλ ≤ y.
Scalar vec_lres(const Vector& x, const Vector& y);
/// x/λ, the greatest z with zλ ≤ x.
Vector vec_rres(const Vector& x, const Scalar& lambda);
/// y/z = ⋀_i y_i/z_i, the greatest λ with λz ≤ y (left semimodule residual).
Scalar covec_rres(const CoVector& y, const CoVector& z);
/// λ\y, the greatest z with λz ≤ y.
CoVector covec_lres(const Scalar& lambda, const CoVector& y);

class Matrix {
public:
    /// Row-major entries, rows*cols of them, rows and cols positive.
    Matrix(SemiringId sr, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    /// Builds from explicit rows of equal length.
    static Matrix from_rows(SemiringId sr, const std::vector<std::vector<Scalar>>& rows);
    static Matrix identity(SemiringId sr, std::size_t n);
    static Matrix filled(SemiringId sr, std::size_t rows, std::size_t cols, const Scalar& value);

    SemiringId semiring() const noexcept { return sr_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    Vector column(std::size_t j) const;
    CoVector row(std::size_t i) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    SemiringId sr_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// A⊗x.
Vector mat_vec(const Matrix& a, const Vector& x);
/// y⊗A.
CoVector covec_mat(const CoVector& y, const Matrix& a);
/// y⊗x = ⋁_i y_i x_i, the canonical bracket.
Scalar dot(const CoVector& y, const Vector& x);
/// A\y: the greatest x with A⊗x ≤ y, (A\y)_j = ⋀_i A_ij\y_i.
Vector mat_lres(const Matrix& a, const Vector& y);

/// A finite, possibly empty, list of generators of a complete subsemimodule.
/// The dimension is carried explicitly so that the empty family still knows
/// its ambient space; it generates {bottom}.
class GeneratingFamily {
public:
    GeneratingFamily(SemiringId sr, std::size_t dim, std::vector<Vector> generators = {});
    /// Non-empty family; ambient dimension taken from the first generator.
    explicit GeneratingFamily(std::vector<Vector> generators);
    static GeneratingFamily columns_of(const Matrix& a);

    SemiringId semiring() const noexcept { return sr_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool empty() const noexcept { return generators_.empty(); }
    const Vector& operator[](std::size_t i) const { return generators_[i]; }
    const std::vector<Vector>& generators() const noexcept { return generators_; }
    auto begin() const { return generators_.begin(); }
    auto end() const { return generators_.end(); }

    /// ⋁_i w_i t_i for one coefficient per generator.
    Vector combine(const std::vector<Scalar>& coefficients) const;
    /// Matrix whose columns are the generators (requires a non-empty family).
    Matrix as_matrix() const;

    /// Throws unless x lives in the ambient space of this family.
    void require_compatible(const Vector& x, const char* what) const;

private:
    void validate() const;

    SemiringId sr_;
    std::size_t dim_;
    std::vector<Vector> generators_;
};

void require_same_shape(const Vector& x, const Vector& y, const char* what);

} // namespace residua
