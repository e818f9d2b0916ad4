#include "residua/separate.hpp"

#include "residua/error.hpp"
#include "residua/project.hpp"

namespace residua {

namespace {

void require_semifield(const SemiringId& sr, const char* what) {
    if (!sr.is_semifield()) {
        throw input_error(std::string(what) + " requires a semifield instance (rmax or boolean), got " + sr.name());
    }
}

Vector append(const Vector& v, const Scalar& last) {
    std::vector<Scalar> e = v.entries();
    e.push_back(last);
    return Vector(v.semiring(), std::move(e));
}

} // namespace

SeparationCertificate separate_from_module(const GeneratingFamily& w, const Vector& x) {
    ProjectionResult r = project(w, x);
    for (const Vector& g : w) {
        if (!(vec_lres(g, r.projection) == vec_lres(g, x))) {
            throw theorem_violation("separate_from_module: w\\P(x) != w\\x on a generator");
        }
    }
    const bool separated = !(vec_lres(x, r.projection) == vec_lres(x, x));
    if (separated == r.fixed) {
        throw theorem_violation("separate_from_module: x\\P(x) test disagrees with P(x) = x");
    }
    return SeparationCertificate{std::move(r.projection), true, separated};
}

SeparationCertificate separate_dual(const GeneratingFamily& w, const Vector& x) {
    Vector p = project_dual(w, x);
    for (const Vector& g : w) {
        if (!(vec_lres(p, g) == vec_lres(x, g))) {
            throw theorem_violation("separate_dual: P(x)\\w != x\\w on a generator");
        }
    }
    const bool separated = !(vec_lres(p, x) == vec_lres(x, x));
    if (separated == (p == x)) {
        throw theorem_violation("separate_dual: P(x)\\x test disagrees with P(x) = x");
    }
    return SeparationCertificate{std::move(p), true, separated};
}

GeneratingFamily lift_convex(const GeneratingFamily& c) {
    const Scalar e = Scalar::unit(c.semiring());
    std::vector<Vector> lifted;
    lifted.reserve(c.size());
    for (const Vector& g : c) {
        lifted.push_back(append(g, e));
    }
    return GeneratingFamily(c.semiring(), c.dim() + 1, std::move(lifted));
}

ConvexSeparation separate_from_convex(const GeneratingFamily& c, const Vector& x) {
    c.require_compatible(x, "separate_from_convex");
    require_semifield(c.semiring(), "separate_from_convex");
    if (c.empty()) {
        throw input_error("separate_from_convex: the convex set needs at least one generator");
    }
    const SemiringId sr = c.semiring();
    const Scalar e = Scalar::unit(sr);

    const Vector lifted_x = append(x, e);
    Vector lifted = project(lift_convex(c), lifted_x).projection;

    // Closed-form route, cross-checked against the lifted projection.
    Scalar nu = Scalar::bottom(sr);
    Vector y = Vector::bottom(sr, c.dim());
    for (const Vector& g : c) {
        const Scalar coeff = meet(vec_lres(g, x), e);
        nu = add(nu, coeff);
        y = vjoin(y, act(g, coeff));
    }
    if (!(append(y, nu) == lifted)) {
        throw theorem_violation("separate_from_convex: closed form disagrees with the lifted projection");
    }

    const bool member = lifted == lifted_x;
    for (const Vector& g : c) {
        if (!(meet(vec_lres(g, x), e) == meet(vec_lres(g, y), nu))) {
            throw theorem_violation("separate_from_convex: v\\x ∧ e != v\\y ∧ ν on a generator");
        }
    }
    const Scalar self_x = meet(vec_lres(x, x), e);
    const Scalar self_y = meet(vec_lres(x, y), nu);
    if (member ? !(self_x == self_y) : !lt(self_y, self_x)) {
        throw theorem_violation("separate_from_convex: strict separation of x does not match membership");
    }

    std::optional<Vector> normalized;
    if (const std::optional<Scalar> inv = inverse(nu)) {
        normalized = act(y, *inv);
    }
    return ConvexSeparation{std::move(nu), std::move(y), std::move(lifted), member, std::move(normalized)};
}

std::optional<Vector> convex_projection(const GeneratingFamily& c, const Vector& x) {
    return separate_from_convex(c, x).normalized;
}

HalfSpace::HalfSpace(Vector x_ref, Vector y, Scalar nu) : x_ref_(std::move(x_ref)), y_(std::move(y)), nu_(std::move(nu)) {
    require_same_shape(x_ref_, y_, "halfspace");
    require_same_semiring(x_ref_.semiring(), nu_.semiring(), "halfspace");
}

bool HalfSpace::contains(const Vector& v) const {
    const Scalar e = Scalar::unit(v.semiring());
    return leq(meet(vec_lres(v, x_ref_), e), meet(vec_lres(v, y_), nu_));
}

HalfSpace halfspace(const GeneratingFamily& c, const Vector& x) {
    const ConvexSeparation s = separate_from_convex(c, x);
    HalfSpace h(x, s.y, s.nu);
    for (const Vector& g : c) {
        if (!h.contains(g)) {
            throw theorem_violation("halfspace: a generator of the convex set lies outside");
        }
    }
    if (!s.member && h.contains(x)) {
        throw theorem_violation("halfspace: the separated point lies inside");
    }
    return h;
}

std::optional<Vector> points_separate(const Vector& x, const Vector& y) {
    require_same_shape(x, y, "points_separate");
    if (x == y) {
        return std::nullopt;
    }
    for (const Vector* z : {&x, &y}) {
        if (!(vec_lres(x, *z) == vec_lres(y, *z))) {
            return *z;
        }
    }
    throw theorem_violation("points_separate: distinct points not separated by x or y");
}

} // namespace residua
