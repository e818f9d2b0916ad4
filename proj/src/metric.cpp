#include "residua/metric.hpp"

#include "residua/error.hpp"
#include "residua/project.hpp"

namespace residua {

Scalar d_h(const Vector& x, const Vector& y) {
    require_same_shape(x, y, "d_h");
    return mul(vec_lres(x, y), vec_lres(y, x));
}

bool hilbert_check_projection(const GeneratingFamily& w, const Vector& x, const std::vector<Vector>& v_samples) {
    const Vector p = project(w, x).projection;
    const Scalar bound = d_h(x, p);
    for (const Vector& v : v_samples) {
        w.require_compatible(v, "hilbert sample");
        if (!leq(d_h(x, v), bound)) {
            return false;
        }
    }
    return true;
}

} // namespace residua
