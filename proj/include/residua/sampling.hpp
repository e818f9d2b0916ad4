#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded random scalars, vectors and families for property suites.
 *
 * Built on std::mt19937_64, whose output sequence is fixed by the standard;
 * the mapping to scalars uses only integer arithmetic, so a seed reproduces
 * the same draws on every platform.
 */

#include "residua/fenchel.hpp"
#include "residua/freemod.hpp"

#include <cstdint>
#include <random>

namespace residua {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    /// Uniform in [0, n); n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    /// Uniform in [lo, hi].
    long long between(long long lo, long long hi);
    bool chance(unsigned num, unsigned den) { return below(den) < num; }

    /// p/q with |p| ≤ 12·q, q ∈ {1, 2, 3}.
    Rational small_rational();

    /// Mostly finite; ε with probability 1/8 and ⊤ with probability 1/16.
    Scalar scalar(SemiringId sr);
    Scalar finite_scalar(SemiringId sr);

    Vector vector(SemiringId sr, std::size_t n);
    Vector finite_vector(SemiringId sr, std::size_t n);
    CoVector covector(SemiringId sr, std::size_t n);
    Matrix matrix(SemiringId sr, std::size_t rows, std::size_t cols);
    Matrix finite_matrix(SemiringId sr, std::size_t rows, std::size_t cols);
    GeneratingFamily family(SemiringId sr, std::size_t dim, std::size_t count);
    GeneratingFamily finite_family(SemiringId sr, std::size_t dim, std::size_t count);
    std::vector<Scalar> scalars(SemiringId sr, std::size_t n);
    /// A random combination of the generators of `w` (an element of V).
    Vector member_of(const GeneratingFamily& w);

    /// Strictly increasing grid of `n` points with small rational gaps.
    std::vector<Rational> grid_points(std::size_t n);
    SlopeSet slope_set(std::size_t n);
    GridFunction grid_function(std::size_t n);

private:
    Scalar finite_entry(SemiringId sr);

    std::mt19937_64 rng_;
};

} // namespace residua
