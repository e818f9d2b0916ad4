#include "residua/io.hpp"

#include "residua/error.hpp"

#include <fstream>
#include <sstream>

namespace residua {

namespace {

const json& require_array(const json& j, const char* what) {
    if (!j.is_array()) {
        throw input_error(std::string(what) + " must be a JSON array");
    }
    return j;
}

std::vector<Scalar> entries_from_json(SemiringId sr, const json& j, const char* what) {
    require_array(j, what);
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const json& e : j) {
        out.push_back(scalar_from_json(sr, e));
    }
    return out;
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) {
        throw input_error("rationals are encoded as strings, got " + j.dump());
    }
    return parse_rational(j.get<std::string>());
}

std::vector<Rational> rationals_from_json(const json& j, const char* what) {
    require_array(j, what);
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const json& e : j) {
        out.push_back(rational_from_json(e));
    }
    return out;
}

} // namespace

json to_json(const Scalar& s) { return to_string(s); }

json to_json(const Vector& v) {
    json out = json::array();
    for (const Scalar& s : v) {
        out.push_back(to_string(s));
    }
    return out;
}

json to_json(const CoVector& v) {
    json out = json::array();
    for (const Scalar& s : v) {
        out.push_back(to_string(s));
    }
    return out;
}

json to_json(const Matrix& a) {
    json out = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out.push_back(to_json(a.row(i)));
    }
    return out;
}

json to_json(const std::vector<Scalar>& values) {
    json out = json::array();
    for (const Scalar& s : values) {
        out.push_back(to_string(s));
    }
    return out;
}

Scalar scalar_from_json(SemiringId sr, const json& j) {
    if (!j.is_string()) {
        throw input_error("scalars are encoded as strings, got " + j.dump());
    }
    return parse_scalar(sr, j.get<std::string>());
}

Vector vector_from_json(SemiringId sr, const json& j) {
    auto e = entries_from_json(sr, j, "vector");
    if (e.empty()) {
        throw dimension_mismatch("vectors need at least one entry");
    }
    return Vector(sr, std::move(e));
}

CoVector covector_from_json(SemiringId sr, const json& j) {
    auto e = entries_from_json(sr, j, "covector");
    if (e.empty()) {
        throw dimension_mismatch("covectors need at least one entry");
    }
    return CoVector(sr, std::move(e));
}

Matrix matrix_from_json(SemiringId sr, const json& j) {
    require_array(j, "matrix");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(j.size());
    for (const json& r : j) {
        rows.push_back(entries_from_json(sr, r, "matrix row"));
    }
    return Matrix::from_rows(sr, rows);
}

std::vector<Scalar> scalars_from_json(SemiringId sr, const json& j) { return entries_from_json(sr, j, "scalar list"); }

GeneratingFamily family_from_json(SemiringId sr, const json& j, std::optional<std::size_t> dim) {
    require_array(j, "generators");
    std::vector<Vector> gens;
    gens.reserve(j.size());
    for (const json& g : j) {
        gens.push_back(vector_from_json(sr, g));
    }
    if (gens.empty()) {
        if (!dim) {
            throw input_error("an empty generator list needs a point to fix its dimension");
        }
        return GeneratingFamily(sr, *dim);
    }
    const std::size_t n = gens.front().size();
    if (dim && *dim != n) {
        throw dimension_mismatch("generators have dimension " + std::to_string(n) + ", point has " +
                                 std::to_string(*dim));
    }
    return GeneratingFamily(sr, n, std::move(gens));
}

GridFunction grid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("values")) {
        throw input_error("grid function must be an object with \"points\" and \"values\"");
    }
    return GridFunction(rationals_from_json(j.at("points"), "grid points"),
                        entries_from_json(SemiringId::rmax(), j.at("values"), "grid values"));
}

SlopeSet slopes_from_json(const json& j) { return SlopeSet(rationals_from_json(j, "slopes")); }

std::string canonical_dump(const json& j) { return j.dump(); }

ProblemFile::ProblemFile(json body, std::optional<SemiringId> semiring_flag, std::optional<std::string> phi_flag)
    : body_(std::move(body)), sr_(SemiringId::rmax()) {
    if (!body_.is_object()) {
        throw input_error("problem file must be a JSON object");
    }
    if (semiring_flag) {
        sr_ = *semiring_flag;
    } else if (body_.contains("semiring")) {
        if (!body_.at("semiring").is_string()) {
            throw input_error("\"semiring\" must be a string");
        }
        sr_ = SemiringId::parse(body_.at("semiring").get<std::string>());
    }
    if (phi_flag) {
        phi_ = parse_scalar(sr_, *phi_flag);
    } else if (body_.contains("phi")) {
        phi_ = scalar_from_json(sr_, body_.at("phi"));
    }
}

ProblemFile ProblemFile::load(const std::string& path, std::optional<SemiringId> semiring_flag,
                              std::optional<std::string> phi_flag) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open '" + path + "'");
    }
    json body;
    try {
        body = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("'" + path + "' is not valid JSON: " + e.what());
    }
    return ProblemFile(std::move(body), semiring_flag, std::move(phi_flag));
}

const json& ProblemFile::field(const char* key) const {
    if (!body_.contains(key)) {
        throw input_error(std::string("missing field \"") + key + "\"");
    }
    return body_.at(key);
}

Phi ProblemFile::phi() const { return phi_ ? Phi(*phi_) : Phi::default_for(sr_); }

Vector ProblemFile::vector(const char* key) const { return vector_from_json(sr_, field(key)); }

CoVector ProblemFile::covector(const char* key) const { return covector_from_json(sr_, field(key)); }

Matrix ProblemFile::matrix(const char* key) const { return matrix_from_json(sr_, field(key)); }

std::vector<Scalar> ProblemFile::scalars(const char* key) const { return scalars_from_json(sr_, field(key)); }

GeneratingFamily ProblemFile::family(const char* key, const char* dim_from) const {
    std::optional<std::size_t> dim;
    if (dim_from != nullptr && body_.contains(dim_from)) {
        dim = vector(dim_from).size();
    }
    return family_from_json(sr_, field(key), dim);
}

std::vector<Vector> ProblemFile::vectors(const char* key) const {
    const json& j = require_array(field(key), key);
    std::vector<Vector> out;
    out.reserve(j.size());
    for (const json& v : j) {
        out.push_back(vector_from_json(sr_, v));
    }
    return out;
}

GridFunction ProblemFile::grid(const char* key) const { return grid_from_json(field(key)); }

SlopeSet ProblemFile::slopes(const char* key) const { return slopes_from_json(field(key)); }

} // namespace residua
