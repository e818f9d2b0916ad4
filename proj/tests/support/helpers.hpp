#pragma once

#include "residua/freemod.hpp"

#include <initializer_list>
#include <string>

namespace th {

inline const residua::SemiringId rm = residua::SemiringId::rmax();
inline const residua::SemiringId bl = residua::SemiringId::boolean();
inline const residua::SemiringId nm = residua::SemiringId::nmax();

inline residua::Scalar r(const char* s) { return residua::parse_scalar(rm, s); }
inline residua::Scalar n(const char* s) { return residua::parse_scalar(nm, s); }
inline residua::Scalar b(const char* s) { return residua::parse_scalar(bl, s); }

inline residua::Vector vec(residua::SemiringId sr, std::initializer_list<const char*> xs) {
    std::vector<residua::Scalar> e;
    for (const char* x : xs) {
        e.push_back(residua::parse_scalar(sr, x));
    }
    return residua::Vector(sr, std::move(e));
}
inline residua::Vector rv(std::initializer_list<const char*> xs) { return vec(rm, xs); }
inline residua::CoVector rc(std::initializer_list<const char*> xs) { return residua::transpose(vec(rm, xs)); }

inline residua::Matrix rmat(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<residua::Scalar>> out;
    for (const auto& row : rows) {
        out.push_back(vec(rm, row).entries());
    }
    return residua::Matrix::from_rows(rm, out);
}

inline residua::GeneratingFamily family(std::initializer_list<residua::Vector> gens) {
    return residua::GeneratingFamily(std::vector<residua::Vector>(gens));
}

} // namespace th
