#include "residua/dual.hpp"

#include "residua/error.hpp"

#include <algorithm>
#include <string>

namespace residua {

namespace {

void require_phi(const SemiringId& sr, const Phi& phi, const char* what) {
    require_same_semiring(sr, phi.semiring(), what);
}

// All 2^n boolean vectors of length n, in lexicographic order (eps < e).
template <Orientation O>
std::vector<BasicVector<O>> boolean_cube(std::size_t n) {
    const SemiringId b = SemiringId::boolean();
    std::vector<BasicVector<O>> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Scalar> e;
        e.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool bit = (mask >> (n - 1 - i)) & 1U;
            e.push_back(bit ? Scalar::top(b) : Scalar::bottom(b));
        }
        out.emplace_back(b, std::move(e));
    }
    return out;
}

template <class V>
void sort_unique(std::vector<V>& v) {
    std::sort(v.begin(), v.end(), [](const V& a, const V& b) { return lex_less(a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

DualPairConfig DualPairConfig::canonical(Phi phi) { return DualPairConfig(BracketKind::canonical, std::move(phi), {}); }

DualPairConfig DualPairConfig::matrix_bracket(Matrix a, Phi phi) {
    require_phi(a.semiring(), phi, "matrix bracket");
    return DualPairConfig(BracketKind::matrix, std::move(phi), std::move(a));
}

DualPairConfig DualPairConfig::opposite(Phi phi) { return DualPairConfig(BracketKind::opposite, std::move(phi), {}); }

const Matrix& DualPairConfig::matrix() const {
    if (!a_) {
        throw input_error("bracket has no matrix");
    }
    return *a_;
}

void DualPairConfig::require_x(const Vector& x) const {
    require_phi(x.semiring(), phi_, "dual pair");
    if (kind_ == BracketKind::matrix && x.size() != a_->cols()) {
        throw dimension_mismatch("dual pair: x has " + std::to_string(x.size()) + " entries, A has " +
                                 std::to_string(a_->cols()) + " columns");
    }
}

void DualPairConfig::require_y(const CoVector& y) const {
    require_phi(y.semiring(), phi_, "dual pair");
    if (kind_ == BracketKind::matrix && y.size() != a_->rows()) {
        throw dimension_mismatch("dual pair: y has " + std::to_string(y.size()) + " entries, A has " +
                                 std::to_string(a_->rows()) + " rows");
    }
}

Scalar DualPairConfig::bracket(const CoVector& y, const Vector& x) const {
    require_x(x);
    require_y(y);
    switch (kind_) {
    case BracketKind::canonical: return dot(y, x);
    case BracketKind::matrix: return dot(covec_mat(y, *a_), x);
    case BracketKind::opposite: return vec_lres(x, transpose(y));
    }
    throw input_error("unknown bracket");
}

bool DualPairConfig::y_leq(const CoVector& a, const CoVector& b) const {
    return kind_ == BracketKind::opposite ? leq(b, a) : leq(a, b);
}

CoVector conj_left(const DualPairConfig& cfg, const Vector& x) {
    cfg.require_x(x);
    const Scalar& phi = cfg.phi().value();
    switch (cfg.kind()) {
    case BracketKind::canonical: {
        std::vector<Scalar> out;
        out.reserve(x.size());
        for (const Scalar& xi : x) {
            out.push_back(rres(phi, xi));
        }
        return CoVector(x.semiring(), std::move(out));
    }
    case BracketKind::matrix: {
        // greatest y with y(Ax) ≤ φ, i.e. φ/(Ax) entrywise
        const Vector ax = mat_vec(cfg.matrix(), x);
        std::vector<Scalar> out;
        out.reserve(ax.size());
        for (const Scalar& s : ax) {
            out.push_back(rres(phi, s));
        }
        return CoVector(x.semiring(), std::move(out));
    }
    case BracketKind::opposite:
        // least y (natural order) with x\y ≥ φ, i.e. xφ ≤ y
        return transpose(act(x, phi));
    }
    throw input_error("unknown bracket");
}

Vector conj_right(const DualPairConfig& cfg, const CoVector& y) {
    cfg.require_y(y);
    const Scalar& phi = cfg.phi().value();
    switch (cfg.kind()) {
    case BracketKind::canonical: {
        std::vector<Scalar> out;
        out.reserve(y.size());
        for (const Scalar& yi : y) {
            out.push_back(lres(yi, phi));
        }
        return Vector(y.semiring(), std::move(out));
    }
    case BracketKind::matrix: {
        const CoVector ya = covec_mat(y, cfg.matrix());
        std::vector<Scalar> out;
        out.reserve(ya.size());
        for (const Scalar& s : ya) {
            out.push_back(lres(s, phi));
        }
        return Vector(y.semiring(), std::move(out));
    }
    case BracketKind::opposite:
        // greatest x with xφ ≤ y
        return vec_rres(transpose(y), phi);
    }
    throw input_error("unknown bracket");
}

bool is_closed(const DualPairConfig& cfg, const Vector& x) { return conj_right(cfg, conj_left(cfg, x)) == x; }

bool check_reflexive(SemiringId sr, const Phi& phi, const std::vector<Scalar>& samples) {
    require_phi(sr, phi, "check_reflexive");
    const Scalar& p = phi.value();
    for (const Scalar& lambda : samples) {
        require_same_semiring(sr, lambda.semiring(), "check_reflexive sample");
        if (!(rres(p, lres(lambda, p)) == lambda) || !(lres(rres(p, lambda), p) == lambda)) {
            return false;
        }
    }
    return true;
}

bool is_reflexive_instance(const Phi& phi) {
    const SemiringId sr = phi.semiring();
    switch (sr.kind()) {
    case SemiringKind::rmax: return phi.invertible();
    case SemiringKind::boolean: return true;
    case SemiringKind::nmax: return false;
    case SemiringKind::matrix: break;
    }
    const std::size_t n = sr.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& s = phi.value().entry(i, j);
            if (i == j ? !s.is_finite() : !s.is_top()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void require_reflexive(const Phi& phi, const char* what) {
    if (!is_reflexive_instance(phi)) {
        throw input_error(std::string(what) + ": (" + phi.semiring().name() + ", phi = " + to_string(phi.value()) +
                          ") is not a reflexive instance");
    }
}

} // namespace

Scalar riesz_eval(const Vector& x, const Phi& phi, const Vector& y) {
    require_reflexive(phi, "riesz_eval");
    require_same_shape(x, y, "riesz_eval");
    require_phi(x.semiring(), phi, "riesz_eval");
    return rres(phi.value(), vec_lres(y, x));
}

Vector riesz_represent(const std::vector<Scalar>& f_on_basis, const Phi& phi) {
    require_reflexive(phi, "riesz_represent");
    std::vector<Scalar> out;
    out.reserve(f_on_basis.size());
    for (const Scalar& f : f_on_basis) {
        out.push_back(lres(f, phi.value()));
    }
    return Vector(phi.semiring(), std::move(out));
}

LinearForm::LinearForm(Vector representer, Phi phi) : representer_(std::move(representer)), phi_(std::move(phi)) {
    require_reflexive(phi_, "linear form");
    require_phi(representer_.semiring(), phi_, "linear form");
}

FormExtension extend_form(const GeneratingFamily& w, const std::vector<Scalar>& values, const Phi& phi) {
    require_reflexive(phi, "extend_form");
    require_phi(w.semiring(), phi, "extend_form");
    if (values.size() != w.size()) {
        throw dimension_mismatch("extend_form: one value per generator required");
    }
    std::vector<Scalar> coefficients;
    coefficients.reserve(values.size());
    for (const Scalar& f : values) {
        coefficients.push_back(lres(f, phi.value()));
    }
    Vector x = w.combine(coefficients);
    LinearForm form(x, phi);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!(form(w[k]) == values[k])) {
            throw input_error("values do not define a linear continuous form on V");
        }
    }
    return FormExtension{std::move(x), std::move(form)};
}

Scalar opposite_bracket(const Vector& x, const Vector& y) { return vec_lres(x, y); }

Vector rowcol_image(const Matrix& a, const Phi& phi, const CoVector& z) {
    require_phi(a.semiring(), phi, "rowcol");
    std::vector<Scalar> res;
    res.reserve(z.size());
    for (const Scalar& zi : z) {
        res.push_back(lres(zi, phi.value()));
    }
    return mat_vec(a, Vector(z.semiring(), std::move(res)));
}

LatticeReport rowcol_report(const Matrix& a, const Phi& phi, std::size_t cap) {
    if (a.semiring().kind() != SemiringKind::boolean) {
        throw input_error("rowcol_report enumerates boolean matrices only");
    }
    require_phi(a.semiring(), phi, "rowcol_report");
    if (a.rows() > cap || a.cols() > cap) {
        throw input_error("rowcol_report: matrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          " exceeds the enumeration cap " + std::to_string(cap));
    }

    LatticeReport r;
    for (const CoVector& y : boolean_cube<Orientation::row>(a.rows())) {
        r.row_space.push_back(covec_mat(y, a));
    }
    for (const Vector& x : boolean_cube<Orientation::column>(a.cols())) {
        r.col_space.push_back(mat_vec(a, x));
    }
    sort_unique(r.row_space);
    sort_unique(r.col_space);

    std::vector<Vector> images;
    images.reserve(r.row_space.size());
    for (const CoVector& z : r.row_space) {
        images.push_back(rowcol_image(a, phi, z));
        r.iso_pairs.emplace_back(z, images.back());
    }

    std::vector<Vector> sorted_images = images;
    sort_unique(sorted_images);
    r.bijective = sorted_images.size() == images.size() && sorted_images == r.col_space;

    // Meet inside C(A): the join of every element below both arguments.
    auto lattice_meet = [&](const Vector& u, const Vector& v) {
        Vector acc = Vector::bottom(a.semiring(), a.rows());
        for (const Vector& c : r.col_space) {
            if (leq(c, u) && leq(c, v)) {
                acc = vjoin(acc, c);
            }
        }
        return acc;
    };

    r.order_reversing = true;
    r.joins_to_meets = true;
    const std::size_t m = r.row_space.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (leq(r.row_space[i], r.row_space[j]) && !leq(images[j], images[i])) {
                r.order_reversing = false;
            }
            const Vector joined = rowcol_image(a, phi, vjoin(r.row_space[i], r.row_space[j]));
            if (!(joined == lattice_meet(images[i], images[j]))) {
                r.joins_to_meets = false;
            }
        }
    }
    return r;
}

} // namespace residua
