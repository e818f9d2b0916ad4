#include "residua/project.hpp"

#include "residua/error.hpp"

#include <optional>

namespace residua {

ProjectionResult project(const GeneratingFamily& w, const Vector& x) {
    w.require_compatible(x, "project");
    std::vector<Scalar> coefficients;
    coefficients.reserve(w.size());
    for (const Vector& g : w) {
        coefficients.push_back(vec_lres(g, x));
    }
    Vector p = w.combine(coefficients);
    const bool fixed = p == x;
    return ProjectionResult{std::move(p), std::move(coefficients), fixed};
}

bool is_member(const GeneratingFamily& w, const Vector& x) {
    const ProjectionResult r = project(w, x);
    const bool by_residual = vec_lres(x, r.projection) == vec_lres(x, x);
    if (by_residual != r.fixed) {
        throw theorem_violation("membership: fixed-point test and x\\P(x) = x\\x disagree");
    }
    return r.fixed;
}

Vector project_dual(const GeneratingFamily& w, const Vector& x) {
    w.require_compatible(x, "project_dual");
    Vector acc = Vector::top(w.semiring(), w.dim());
    for (const Vector& g : w) {
        acc = vmeet(acc, vec_rres(g, vec_lres(x, g)));
    }
    return acc;
}

namespace {

class DominatingSearch {
public:
    DominatingSearch(const GeneratingFamily& w, const Vector& x) : w_(w), x_(x) {}

    std::optional<Vector> run() {
        std::vector<Scalar> t(w_.size(), Scalar::bottom(w_.semiring()));
        visit(0, t);
        return best_;
    }

private:
    // Least t_j with A_kj ⊗ t_j ≥ x_k, if generator j can reach coordinate k.
    std::optional<Scalar> requirement(std::size_t k, std::size_t j) const {
        const Scalar& a = w_[j][k];
        if (a.is_bottom()) {
            return std::nullopt;
        }
        if (x_[k].is_top()) {
            return Scalar::top(a.semiring());
        }
        return Scalar::rmax(x_[k].value() - a.value());
    }

    bool covered(std::size_t k, const std::vector<Scalar>& t) const {
        if (x_[k].is_bottom()) {
            return true;
        }
        for (std::size_t j = 0; j < w_.size(); ++j) {
            if (leq(x_[k], mul(w_[j][k], t[j]))) {
                return true;
            }
        }
        return false;
    }

    void visit(std::size_t k, std::vector<Scalar>& t) {
        if (k == w_.dim()) {
            Vector v = w_.combine(t);
            best_ = best_ ? vmeet(*best_, v) : std::move(v);
            return;
        }
        if (covered(k, t)) {
            visit(k + 1, t);
            return;
        }
        for (std::size_t j = 0; j < w_.size(); ++j) {
            const std::optional<Scalar> need = requirement(k, j);
            if (!need) {
                continue;
            }
            const Scalar saved = t[j];
            t[j] = add(saved, *need);
            visit(k + 1, t);
            t[j] = saved;
        }
    }

    const GeneratingFamily& w_;
    const Vector& x_;
    std::optional<Vector> best_;
};

} // namespace

DominatingMeet qv_inf(const GeneratingFamily& w, const Vector& x) {
    w.require_compatible(x, "qv_inf");
    if (w.semiring().kind() != SemiringKind::rmax) {
        throw input_error("qv_inf is only available over rmax");
    }
    for (const Vector& g : w) {
        for (const Scalar& s : g) {
            if (s.is_top()) {
                throw input_error("qv_inf: generators must not contain +inf entries");
            }
        }
    }
    // No dominating element at all: the meet of the empty set is top.
    Vector q = DominatingSearch(w, x).run().value_or(Vector::top(w.semiring(), w.dim()));
    if (!leq(x, q)) {
        throw theorem_violation("qv_inf: result is not above x");
    }
    const bool member = is_member(w, q);
    return DominatingMeet{std::move(q), member};
}

} // namespace residua
