#pragma once

/**
 * @file fenchel.hpp
 * @brief Legendre–Fenchel conjugation on 1-D grids as max-plus residuation.
 *
 * A function sampled on grid points u_1 < … < u_m is a vector of K^m over
 * rmax. Each slope s gives the linear generator w_s = (s·u_k)_k, and
 *
 *     w_s\f = min_k (f(u_k) - s·u_k) = -f*(s),
 *
 * with +inf - inf = +inf as residuation dictates. Projecting f onto the span
 * of {w_s} yields max_s (s·u - f*(s)), the convex hull of f relative to the
 * slope set (its biconjugate).
 */

#include "residua/freemod.hpp"

#include <vector>

namespace residua {

class GridFunction {
public:
    /// Points strictly increasing, at least two; values over rmax.
    GridFunction(std::vector<Rational> points, std::vector<Scalar> values);

    const std::vector<Rational>& points() const noexcept { return points_; }
    const std::vector<Scalar>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return points_.size(); }

    Vector as_vector() const { return Vector(SemiringId::rmax(), values_); }

    friend bool operator==(const GridFunction&, const GridFunction&) = default;

private:
    std::vector<Rational> points_;
    std::vector<Scalar> values_;
};

class SlopeSet {
public:
    /// Nonempty and strictly increasing.
    explicit SlopeSet(std::vector<Rational> slopes);

    const std::vector<Rational>& slopes() const noexcept { return slopes_; }
    std::size_t size() const noexcept { return slopes_.size(); }

    friend bool operator==(const SlopeSet&, const SlopeSet&) = default;

private:
    std::vector<Rational> slopes_;
};

struct Transform {
    SlopeSet slopes;
    /// f*(s) for each slope.
    std::vector<Scalar> values;
};

/// -a with -(±inf) = ∓inf.
Scalar negate(const Scalar& a);

/// The linear function u ↦ s·u sampled on the grid of f.
Vector linear_generator(const Rational& slope, const std::vector<Rational>& points);

/// w\f for w(u) = s·u.
Scalar residual_bracket(const Rational& slope, const GridFunction& f);

Transform fenchel_transform(const GridFunction& f, const SlopeSet& slopes);

/// P_V(f) for V spanned by the linear functions with the given slopes.
GridFunction lsc_convex_hull(const GridFunction& f, const SlopeSet& slopes);

/// (hull f)* = f* on every slope, and hull(hull f) = hull f.
bool biconjugate_fixed_point_check(const GridFunction& f, const SlopeSet& slopes);

} // namespace residua
