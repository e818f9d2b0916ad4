#include "residua/fenchel.hpp"

#include "residua/error.hpp"
#include "residua/project.hpp"

#include <algorithm>

namespace residua {

namespace {

bool strictly_increasing(const std::vector<Rational>& v) {
    return std::adjacent_find(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return !(a < b); }) ==
           v.end();
}

GeneratingFamily linear_family(const SlopeSet& slopes, const std::vector<Rational>& points) {
    std::vector<Vector> gens;
    gens.reserve(slopes.size());
    for (const Rational& s : slopes.slopes()) {
        gens.push_back(linear_generator(s, points));
    }
    return GeneratingFamily(SemiringId::rmax(), points.size(), std::move(gens));
}

} // namespace

GridFunction::GridFunction(std::vector<Rational> points, std::vector<Scalar> values)
    : points_(std::move(points)), values_(std::move(values)) {
    if (points_.size() < 2) {
        throw input_error("grid function needs at least two points");
    }
    if (points_.size() != values_.size()) {
        throw dimension_mismatch("grid function: points and values differ in length");
    }
    if (!strictly_increasing(points_)) {
        throw input_error("grid points must be strictly increasing");
    }
    for (const Scalar& v : values_) {
        require_same_semiring(v.semiring(), SemiringId::rmax(), "grid value");
    }
}

SlopeSet::SlopeSet(std::vector<Rational> slopes) : slopes_(std::move(slopes)) {
    if (slopes_.empty()) {
        throw input_error("slope set must be nonempty");
    }
    if (!strictly_increasing(slopes_)) {
        throw input_error("slopes must be strictly increasing");
    }
}

Scalar negate(const Scalar& a) {
    require_same_semiring(a.semiring(), SemiringId::rmax(), "negate");
    if (a.is_bottom()) {
        return Scalar::top(a.semiring());
    }
    if (a.is_top()) {
        return Scalar::bottom(a.semiring());
    }
    return Scalar::rmax(-a.value());
}

Vector linear_generator(const Rational& slope, const std::vector<Rational>& points) {
    std::vector<Scalar> out;
    out.reserve(points.size());
    for (const Rational& u : points) {
        out.push_back(Scalar::rmax(Rational(slope * u)));
    }
    return Vector(SemiringId::rmax(), std::move(out));
}

Scalar residual_bracket(const Rational& slope, const GridFunction& f) {
    return vec_lres(linear_generator(slope, f.points()), f.as_vector());
}

Transform fenchel_transform(const GridFunction& f, const SlopeSet& slopes) {
    std::vector<Scalar> values;
    values.reserve(slopes.size());
    for (const Rational& s : slopes.slopes()) {
        values.push_back(negate(residual_bracket(s, f)));
    }
    return Transform{slopes, std::move(values)};
}

GridFunction lsc_convex_hull(const GridFunction& f, const SlopeSet& slopes) {
    const Vector p = project(linear_family(slopes, f.points()), f.as_vector()).projection;
    if (!leq(p, f.as_vector())) {
        throw theorem_violation("lsc_convex_hull: hull exceeds f");
    }
    return GridFunction(f.points(), p.entries());
}

bool biconjugate_fixed_point_check(const GridFunction& f, const SlopeSet& slopes) {
    const GridFunction hull = lsc_convex_hull(f, slopes);
    return fenchel_transform(hull, slopes).values == fenchel_transform(f, slopes).values &&
           lsc_convex_hull(hull, slopes) == hull;
}

} // namespace residua
