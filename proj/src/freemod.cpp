#include "residua/freemod.hpp"

#include "residua/error.hpp"

#include <string>

namespace residua {

namespace {

template <Orientation O>
void require_shape(const BasicVector<O>& x, const BasicVector<O>& y, const char* what) {
    require_same_semiring(x.semiring(), y.semiring(), what);
    if (x.size() != y.size()) {
        throw dimension_mismatch(std::string(what) + ": dimension " + std::to_string(x.size()) + " vs " +
                                 std::to_string(y.size()));
    }
}

template <Orientation O, class F>
BasicVector<O> zip(const BasicVector<O>& x, const BasicVector<O>& y, F&& f) {
    std::vector<Scalar> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(f(x[i], y[i]));
    }
    return BasicVector<O>(x.semiring(), std::move(out));
}

const Vector& first_generator(const std::vector<Vector>& generators) {
    if (generators.empty()) {
        throw dimension_mismatch("empty family needs an explicit dimension");
    }
    return generators.front();
}

} // namespace

template <Orientation O>
BasicVector<O>::BasicVector(SemiringId sr, std::vector<Scalar> entries) : sr_(sr), entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw dimension_mismatch("vectors need at least one entry");
    }
    for (const Scalar& s : entries_) {
        require_same_semiring(s.semiring(), sr_, "vector entry");
    }
}

template <Orientation O>
BasicVector<O> BasicVector<O>::basis(SemiringId sr, std::size_t n, std::size_t i) {
    std::vector<Scalar> e(n, Scalar::bottom(sr));
    e.at(i) = Scalar::unit(sr);
    return BasicVector(sr, std::move(e));
}

template class BasicVector<Orientation::column>;
template class BasicVector<Orientation::row>;

CoVector transpose(const Vector& x) { return CoVector(x.semiring(), x.entries()); }
Vector transpose(const CoVector& y) { return Vector(y.semiring(), y.entries()); }

template <Orientation O>
BasicVector<O> vjoin(const BasicVector<O>& x, const BasicVector<O>& y) {
    require_shape(x, y, "vjoin");
    return zip(x, y, [](const Scalar& a, const Scalar& b) { return add(a, b); });
}

template <Orientation O>
BasicVector<O> vmeet(const BasicVector<O>& x, const BasicVector<O>& y) {
    require_shape(x, y, "vmeet");
    return zip(x, y, [](const Scalar& a, const Scalar& b) { return meet(a, b); });
}

template <Orientation O>
bool leq(const BasicVector<O>& x, const BasicVector<O>& y) {
    require_shape(x, y, "leq");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!leq(x[i], y[i])) {
            return false;
        }
    }
    return true;
}

template Vector vjoin(const Vector&, const Vector&);
template CoVector vjoin(const CoVector&, const CoVector&);
template Vector vmeet(const Vector&, const Vector&);
template CoVector vmeet(const CoVector&, const CoVector&);
template bool leq(const Vector&, const Vector&);
template bool leq(const CoVector&, const CoVector&);

void require_same_shape(const Vector& x, const Vector& y, const char* what) { require_shape(x, y, what); }

Vector act(const Vector& x, const Scalar& lambda) {
    require_same_semiring(x.semiring(), lambda.semiring(), "act");
    std::vector<Scalar> out;
    out.reserve(x.size());
    for (const Scalar& xi : x) {
        out.push_back(mul(xi, lambda));
    }
    return Vector(x.semiring(), std::move(out));
}

CoVector act(const Scalar& lambda, const CoVector& y) {
    require_same_semiring(y.semiring(), lambda.semiring(), "act");
    std::vector<Scalar> out;
    out.reserve(y.size());
    for (const Scalar& yi : y) {
        out.push_back(mul(lambda, yi));
    }
    return CoVector(y.semiring(), std::move(out));
}

Scalar vec_lres(const Vector& x, const Vector& y) {
    require_shape(x, y, "vec_lres");
    Scalar acc = Scalar::top(x.semiring());
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc = meet(acc, lres(x[i], y[i]));
    }
    return acc;
}

Vector vec_rres(const Vector& x, const Scalar& lambda) {
    require_same_semiring(x.semiring(), lambda.semiring(), "vec_rres");
    std::vector<Scalar> out;
    out.reserve(x.size());
    for (const Scalar& xi : x) {
        out.push_back(rres(xi, lambda));
    }
    return Vector(x.semiring(), std::move(out));
}

Scalar covec_rres(const CoVector& y, const CoVector& z) {
    require_shape(y, z, "covec_rres");
    Scalar acc = Scalar::top(y.semiring());
    for (std::size_t i = 0; i < y.size(); ++i) {
        acc = meet(acc, rres(y[i], z[i]));
    }
    return acc;
}

CoVector covec_lres(const Scalar& lambda, const CoVector& y) {
    require_same_semiring(y.semiring(), lambda.semiring(), "covec_lres");
    std::vector<Scalar> out;
    out.reserve(y.size());
    for (const Scalar& yi : y) {
        out.push_back(lres(lambda, yi));
    }
    return CoVector(y.semiring(), std::move(out));
}

Matrix::Matrix(SemiringId sr, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : sr_(sr), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_) {
        throw dimension_mismatch("matrix shape " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                 " does not match " + std::to_string(entries_.size()) + " entries");
    }
    for (const Scalar& s : entries_) {
        require_same_semiring(s.semiring(), sr_, "matrix entry");
    }
}

Matrix Matrix::from_rows(SemiringId sr, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw dimension_mismatch("matrix needs at least one row and one column");
    }
    const std::size_t cols = rows.front().size();
    std::vector<Scalar> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw dimension_mismatch("ragged matrix rows");
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(sr, rows.size(), cols, std::move(entries));
}

Matrix Matrix::identity(SemiringId sr, std::size_t n) {
    std::vector<Scalar> entries(n * n, Scalar::bottom(sr));
    for (std::size_t i = 0; i < n; ++i) {
        entries[i * n + i] = Scalar::unit(sr);
    }
    return Matrix(sr, n, n, std::move(entries));
}

Matrix Matrix::filled(SemiringId sr, std::size_t rows, std::size_t cols, const Scalar& value) {
    return Matrix(sr, rows, cols, std::vector<Scalar>(rows * cols, value));
}

Vector Matrix::column(std::size_t j) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out.push_back(at(i, j));
    }
    return Vector(sr_, std::move(out));
}

CoVector Matrix::row(std::size_t i) const {
    const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return CoVector(sr_, std::vector<Scalar>(first, first + static_cast<std::ptrdiff_t>(cols_)));
}

Vector mat_vec(const Matrix& a, const Vector& x) {
    require_same_semiring(a.semiring(), x.semiring(), "mat_vec");
    if (a.cols() != x.size()) {
        throw dimension_mismatch("mat_vec: matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                                 std::to_string(x.size()) + " entries");
    }
    std::vector<Scalar> out;
    out.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar acc = Scalar::bottom(a.semiring());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc = add(acc, mul(a.at(i, j), x[j]));
        }
        out.push_back(std::move(acc));
    }
    return Vector(a.semiring(), std::move(out));
}

CoVector covec_mat(const CoVector& y, const Matrix& a) {
    require_same_semiring(a.semiring(), y.semiring(), "covec_mat");
    if (a.rows() != y.size()) {
        throw dimension_mismatch("covec_mat: covector has " + std::to_string(y.size()) + " entries, matrix has " +
                                 std::to_string(a.rows()) + " rows");
    }
    std::vector<Scalar> out;
    out.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Scalar acc = Scalar::bottom(a.semiring());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            acc = add(acc, mul(y[i], a.at(i, j)));
        }
        out.push_back(std::move(acc));
    }
    return CoVector(a.semiring(), std::move(out));
}

Scalar dot(const CoVector& y, const Vector& x) {
    require_same_semiring(y.semiring(), x.semiring(), "dot");
    if (y.size() != x.size()) {
        throw dimension_mismatch("dot: dimension " + std::to_string(y.size()) + " vs " + std::to_string(x.size()));
    }
    Scalar acc = Scalar::bottom(x.semiring());
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc = add(acc, mul(y[i], x[i]));
    }
    return acc;
}

Vector mat_lres(const Matrix& a, const Vector& y) {
    require_same_semiring(a.semiring(), y.semiring(), "mat_lres");
    if (a.rows() != y.size()) {
        throw dimension_mismatch("mat_lres: matrix has " + std::to_string(a.rows()) + " rows, vector has " +
                                 std::to_string(y.size()) + " entries");
    }
    std::vector<Scalar> out;
    out.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Scalar acc = Scalar::top(a.semiring());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            acc = meet(acc, lres(a.at(i, j), y[i]));
        }
        out.push_back(std::move(acc));
    }
    return Vector(a.semiring(), std::move(out));
}

GeneratingFamily::GeneratingFamily(SemiringId sr, std::size_t dim, std::vector<Vector> generators)
    : sr_(sr), dim_(dim), generators_(std::move(generators)) {
    validate();
}

// members are initialized in declaration order, so generators are read before the move
GeneratingFamily::GeneratingFamily(std::vector<Vector> generators)
    : sr_(first_generator(generators).semiring()), dim_(generators.front().size()),
      generators_(std::move(generators)) {
    validate();
}

void GeneratingFamily::validate() const {
    if (dim_ == 0) {
        throw dimension_mismatch("generating family needs a positive ambient dimension");
    }
    for (const Vector& w : generators_) {
        require_compatible(w, "generator");
    }
}

GeneratingFamily GeneratingFamily::columns_of(const Matrix& a) {
    std::vector<Vector> cols;
    cols.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        cols.push_back(a.column(j));
    }
    return GeneratingFamily(a.semiring(), a.rows(), std::move(cols));
}

void GeneratingFamily::require_compatible(const Vector& x, const char* what) const {
    require_same_semiring(x.semiring(), sr_, what);
    if (x.size() != dim_) {
        throw dimension_mismatch(std::string(what) + ": dimension " + std::to_string(x.size()) +
                                 " vs ambient dimension " + std::to_string(dim_));
    }
}

Vector GeneratingFamily::combine(const std::vector<Scalar>& coefficients) const {
    if (coefficients.size() != generators_.size()) {
        throw dimension_mismatch("combine: one coefficient per generator required");
    }
    Vector acc = Vector::bottom(sr_, dim_);
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        acc = vjoin(acc, act(generators_[k], coefficients[k]));
    }
    return acc;
}

Matrix GeneratingFamily::as_matrix() const {
    if (generators_.empty()) {
        throw dimension_mismatch("as_matrix on an empty family");
    }
    std::vector<Scalar> entries;
    entries.reserve(dim_ * generators_.size());
    for (std::size_t i = 0; i < dim_; ++i) {
        for (const Vector& w : generators_) {
            entries.push_back(w[i]);
        }
    }
    return Matrix(sr_, dim_, generators_.size(), std::move(entries));
}

} // namespace residua
