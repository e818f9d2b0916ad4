#include "residua/sampling.hpp"

namespace residua {

long long Sampler::between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::size_t>(hi - lo + 1)));
}

Rational Sampler::small_rational() {
    const long long q = between(1, 3);
    return Rational(between(-12 * q, 12 * q), q);
}

Scalar Sampler::finite_entry(SemiringId sr) {
    switch (sr.kind()) {
    case SemiringKind::rmax: return Scalar::rmax(small_rational());
    case SemiringKind::boolean: return Scalar::unit(sr);
    case SemiringKind::nmax: return Scalar::finite(sr, Rational(between(0, 10)));
    case SemiringKind::matrix: break;
    }
    return Scalar::bottom(sr);
}

Scalar Sampler::scalar(SemiringId sr) {
    if (sr.kind() == SemiringKind::boolean) {
        return chance(1, 2) ? Scalar::unit(sr) : Scalar::bottom(sr);
    }
    if (sr.kind() == SemiringKind::matrix) {
        const std::size_t n = sr.dim();
        std::vector<Scalar> e;
        e.reserve(n * n);
        for (std::size_t i = 0; i < n * n; ++i) {
            e.push_back(scalar(SemiringId::rmax()));
        }
        return Scalar::matrix(n, std::move(e));
    }
    const std::size_t r = below(16);
    if (r < 2) {
        return Scalar::bottom(sr);
    }
    if (r == 2) {
        return Scalar::top(sr);
    }
    return finite_entry(sr);
}

Scalar Sampler::finite_scalar(SemiringId sr) {
    if (sr.kind() == SemiringKind::matrix) {
        const std::size_t n = sr.dim();
        std::vector<Scalar> e;
        e.reserve(n * n);
        for (std::size_t i = 0; i < n * n; ++i) {
            e.push_back(finite_entry(SemiringId::rmax()));
        }
        return Scalar::matrix(n, std::move(e));
    }
    return finite_entry(sr);
}

Vector Sampler::vector(SemiringId sr, std::size_t n) { return Vector(sr, scalars(sr, n)); }

Vector Sampler::finite_vector(SemiringId sr, std::size_t n) {
    std::vector<Scalar> e;
    e.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(finite_scalar(sr));
    }
    return Vector(sr, std::move(e));
}

CoVector Sampler::covector(SemiringId sr, std::size_t n) { return CoVector(sr, scalars(sr, n)); }

Matrix Sampler::matrix(SemiringId sr, std::size_t rows, std::size_t cols) {
    return Matrix(sr, rows, cols, scalars(sr, rows * cols));
}

Matrix Sampler::finite_matrix(SemiringId sr, std::size_t rows, std::size_t cols) {
    std::vector<Scalar> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        e.push_back(finite_scalar(sr));
    }
    return Matrix(sr, rows, cols, std::move(e));
}

GeneratingFamily Sampler::family(SemiringId sr, std::size_t dim, std::size_t count) {
    std::vector<Vector> gens;
    gens.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        gens.push_back(vector(sr, dim));
    }
    return GeneratingFamily(sr, dim, std::move(gens));
}

GeneratingFamily Sampler::finite_family(SemiringId sr, std::size_t dim, std::size_t count) {
    std::vector<Vector> gens;
    gens.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        gens.push_back(finite_vector(sr, dim));
    }
    return GeneratingFamily(sr, dim, std::move(gens));
}

std::vector<Scalar> Sampler::scalars(SemiringId sr, std::size_t n) {
    std::vector<Scalar> e;
    e.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(scalar(sr));
    }
    return e;
}

Vector Sampler::member_of(const GeneratingFamily& w) { return w.combine(scalars(w.semiring(), w.size())); }

std::vector<Rational> Sampler::grid_points(std::size_t n) {
    std::vector<Rational> pts;
    pts.reserve(n);
    Rational u(between(-20, 0), 2);
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(u);
        u += Rational(between(1, 4), between(1, 2));
    }
    return pts;
}

SlopeSet Sampler::slope_set(std::size_t n) {
    std::vector<Rational> s;
    s.reserve(n);
    Rational v(between(-12, 0), 2);
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(v);
        v += Rational(between(1, 3), between(1, 3));
    }
    return SlopeSet(std::move(s));
}

GridFunction Sampler::grid_function(std::size_t n) {
    return GridFunction(grid_points(n), scalars(SemiringId::rmax(), n));
}

} // namespace residua
