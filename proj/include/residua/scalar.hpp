#pragma once

/**
 * @file scalar.hpp
 * @brief Complete idempotent semirings with exact arithmetic and residuation.
 *
 * Four instances are supported, selected at runtime by a SemiringId tag:
 *
 *  - rmax:    R ∪ {-inf, +inf} with (max, +), exact rationals
 *  - boolean: {eps, e} with (or, and)
 *  - nmax:    N ∪ {-inf, +inf} with (max, +)
 *  - matrix:  n×n matrices over rmax with the max-plus product
 *
 * The ambiguous expression "-inf + inf" is resolved per operation:
 * the product is absorbed by eps (-inf ⊗ +inf = -inf) while residuation
 * favours the top (-inf \ -inf = +inf \ +inf = +inf).
 *
 * Scalars are immutable values; all free functions are pure.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace residua {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class SemiringKind { rmax, boolean, nmax, matrix };

class SemiringId {
public:
    static SemiringId rmax() { return SemiringId(SemiringKind::rmax, 0); }
    static SemiringId boolean() { return SemiringId(SemiringKind::boolean, 0); }
    static SemiringId nmax() { return SemiringId(SemiringKind::nmax, 0); }
    /// Square n×n matrices over rmax; n must be positive.
    static SemiringId matrix(std::size_t n);

    /// Parses "rmax", "boolean", "nmax" or "matrix:<n>".
    static SemiringId parse(std::string_view text);

    SemiringKind kind() const noexcept { return kind_; }
    /// Matrix dimension; 0 for scalar instances.
    std::size_t dim() const noexcept { return dim_; }

    bool is_commutative() const noexcept { return kind_ != SemiringKind::matrix; }
    /// Every element except eps and top is invertible (rmax, boolean).
    bool is_semifield() const noexcept {
        return kind_ == SemiringKind::rmax || kind_ == SemiringKind::boolean;
    }
    bool is_totally_ordered() const noexcept { return kind_ != SemiringKind::matrix; }

    std::string name() const;

    friend bool operator==(const SemiringId&, const SemiringId&) = default;

private:
    SemiringId(SemiringKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

    SemiringKind kind_;
    std::size_t dim_;
};

class Scalar {
public:
    enum class Kind { bottom, finite, top, entries };

    /// eps, the least element.
    static Scalar bottom(SemiringId sr);
    /// The greatest element.
    static Scalar top(SemiringId sr);
    /// e, the multiplicative unit.
    static Scalar unit(SemiringId sr);
    /// A finite element of rmax or nmax. nmax requires a nonnegative integer.
    static Scalar finite(SemiringId sr, Rational value);
    /// An element of matrix:n from n*n row-major rmax entries.
    static Scalar matrix(std::size_t n, std::vector<Scalar> entries);

    static Scalar rmax(Rational value) { return finite(SemiringId::rmax(), std::move(value)); }
    static Scalar rmax(long long value) { return rmax(Rational(value)); }

    SemiringId semiring() const noexcept { return sr_; }
    Kind kind() const noexcept { return kind_; }

    bool is_bottom() const;
    bool is_top() const;
    bool is_finite() const noexcept { return kind_ == Kind::finite; }

    /// Value of a finite rmax/nmax element.
    const Rational& value() const;
    /// Row-major entries of a matrix element.
    std::span<const Scalar> entries() const;
    const Scalar& entry(std::size_t i, std::size_t j) const;

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    Scalar(SemiringId sr, Kind kind) : sr_(sr), kind_(kind) {}

    SemiringId sr_;
    Kind kind_;
    Rational value_;
    std::vector<Scalar> entries_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
/// a\b: the greatest λ with a⊗λ ≤ b.
Scalar lres(const Scalar& a, const Scalar& b);
/// b/a: the greatest μ with μ⊗a ≤ b.
Scalar rres(const Scalar& b, const Scalar& a);
Scalar meet(const Scalar& a, const Scalar& b);

/// Natural order a ≤ b ⇔ a⊕b = b.
bool leq(const Scalar& a, const Scalar& b);
/// Strict part of the natural order (≤ and ≠).
bool lt(const Scalar& a, const Scalar& b);

/// Multiplicative inverse for elements other than eps and top (semifields only).
std::optional<Scalar> inverse(const Scalar& a);

/// Deterministic total order used for sorting; agrees with the natural order
/// on totally ordered instances and is lexicographic on matrix entries.
std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

/// Canonical text form: "-inf", "+inf", "p/q" ("p" for integers); "eps"/"e" for
/// boolean; matrices as "[[r,r],[r,r]]".
std::string to_string(const Scalar& a);
Scalar parse_scalar(SemiringId sr, std::string_view text);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Distinguished element φ of the bracket codomain used by conjugations.
class Phi {
public:
    /// Boolean φ must be eps, the only value making {eps, e} reflexive.
    explicit Phi(Scalar value);

    /// rmax → 0, boolean → eps, nmax → 0, matrix:n → diagonal_matrix(n, 0).
    static Phi default_for(SemiringId sr);
    /// φ_nn: φ on the diagonal, +inf off the diagonal.
    static Phi diagonal_matrix(std::size_t n, const Scalar& phi);

    const Scalar& value() const noexcept { return value_; }
    bool invertible() const noexcept { return invertible_; }
    SemiringId semiring() const noexcept { return value_.semiring(); }

private:
    Scalar value_;
    bool invertible_;
};

/// Throws semiring_mismatch unless both tags agree.
void require_same_semiring(const SemiringId& a, const SemiringId& b, std::string_view what);

} // namespace residua
