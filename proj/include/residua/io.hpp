#pragma once

/**
 * @file io.hpp
 * @brief JSON encoding of scalars, vectors, matrices, grid functions and
 *        problem files.
 *
 * Scalars are strings ("-inf", "+inf", "p/q", or "eps"/"e" for boolean),
 * vectors are arrays of scalars and matrices arrays of rows. A problem file
 * is an object with a "semiring" tag, an optional "phi" and the operands of
 * one command. Output objects are dumped with sorted keys and no whitespace,
 * which makes the serialization canonical.
 */

#include "residua/fenchel.hpp"
#include "residua/freemod.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace residua {

using json = nlohmann::json;

json to_json(const Scalar& s);
json to_json(const Vector& v);
json to_json(const CoVector& v);
json to_json(const Matrix& a);
json to_json(const std::vector<Scalar>& values);

Scalar scalar_from_json(SemiringId sr, const json& j);
Vector vector_from_json(SemiringId sr, const json& j);
CoVector covector_from_json(SemiringId sr, const json& j);
Matrix matrix_from_json(SemiringId sr, const json& j);
std::vector<Scalar> scalars_from_json(SemiringId sr, const json& j);
/// Generators as an array of vectors; `dim` is used when the array is empty.
GeneratingFamily family_from_json(SemiringId sr, const json& j, std::optional<std::size_t> dim);
GridFunction grid_from_json(const json& j);
SlopeSet slopes_from_json(const json& j);

/// Canonical text form of a JSON value (sorted keys, compact).
std::string canonical_dump(const json& j);

class ProblemFile {
public:
    /// `semiring_flag` / `phi_flag` override the corresponding file fields.
    ProblemFile(json body, std::optional<SemiringId> semiring_flag = std::nullopt,
                std::optional<std::string> phi_flag = std::nullopt);

    static ProblemFile load(const std::string& path, std::optional<SemiringId> semiring_flag = std::nullopt,
                            std::optional<std::string> phi_flag = std::nullopt);

    SemiringId semiring() const noexcept { return sr_; }
    const json& body() const noexcept { return body_; }
    bool has(const char* key) const { return body_.contains(key); }

    Phi phi() const;
    Vector vector(const char* key) const;
    CoVector covector(const char* key) const;
    Matrix matrix(const char* key) const;
    std::vector<Scalar> scalars(const char* key) const;
    /// Generators under `key`; an empty list takes its dimension from
    /// `dim_from` when that field is present.
    GeneratingFamily family(const char* key, const char* dim_from = "point") const;
    std::vector<Vector> vectors(const char* key) const;
    GridFunction grid(const char* key) const;
    SlopeSet slopes(const char* key) const;

private:
    const json& field(const char* key) const;

    json body_;
    SemiringId sr_;
    std::optional<Scalar> phi_;
};

} // namespace residua
