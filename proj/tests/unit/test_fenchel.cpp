#include "helpers.hpp"
#include "oracles.hpp"

#include "residua/error.hpp"
#include "residua/fenchel.hpp"
#include "residua/sampling.hpp"

#include <doctest.h>

using namespace residua;
using th::r;

namespace {

std::vector<Rational> qs(std::initializer_list<int> xs) { return std::vector<Rational>(xs.begin(), xs.end()); }

GridFunction fn(std::initializer_list<const char*> values) {
    return GridFunction(qs({-1, 0, 1}), th::rv(values).entries());
}

oracle::Vec ext(const std::vector<Scalar>& v) { return oracle::from(Vector(th::rm, v)); }

} // namespace

TEST_CASE("residual bracket of a linear function") {
    CHECK(residual_bracket(0, fn({"0", "0", "0"})) == r("0"));
    CHECK(residual_bracket(1, fn({"1", "0", "1"})) == r("0"));
    CHECK(residual_bracket(1, fn({"+inf", "+inf", "+inf"})) == r("+inf"));
}

TEST_CASE("conjugate values") {
    const SlopeSet s(qs({-1, 0, 1}));
    const Transform t = fenchel_transform(fn({"1", "0", "1"}), s);
    CHECK(t.values == th::rv({"0", "0", "0"}).entries());
    // f = -inf everywhere: w\f = -inf, so f* = +inf
    CHECK(fenchel_transform(fn({"-inf", "-inf", "-inf"}), s).values == th::rv({"+inf", "+inf", "+inf"}).entries());
    const Transform single = fenchel_transform(fn({"+inf", "0", "+inf"}), s);
    CHECK(single.values == th::rv({"0", "0", "0"}).entries());
    const Transform shifted = fenchel_transform(GridFunction(qs({-1, 2, 3}), th::rv({"+inf", "0", "+inf"}).entries()), s);
    CHECK(shifted.values == th::rv({"-2", "0", "2"}).entries());
}

TEST_CASE("convex hull") {
    const SlopeSet s(qs({-1, 0, 1}));
    const GridFunction abs = fn({"1", "0", "1"});
    CHECK(lsc_convex_hull(abs, s) == abs);
    CHECK(lsc_convex_hull(fn({"0", "1", "0"}), s).values() == th::rv({"0", "0", "0"}).entries());
    const GridFunction top = fn({"+inf", "+inf", "+inf"});
    CHECK(lsc_convex_hull(top, s) == top);
    CHECK(biconjugate_fixed_point_check(abs, s));
    CHECK(biconjugate_fixed_point_check(top, s));
}

TEST_CASE("hull and conjugate agree with the double-loop oracle") {
    Sampler smp(13);
    for (int t = 0; t < 200; ++t) {
        const GridFunction f = smp.grid_function(2 + smp.below(40));
        const SlopeSet s = smp.slope_set(1 + smp.below(21));
        const Transform tr = fenchel_transform(f, s);
        for (std::size_t j = 0; j < s.size(); ++j) {
            CHECK(oracle::from(tr.values[j]) == oracle::conjugate_direct(f.points(), ext(f.values()), s.slopes()[j]));
        }
        CHECK(ext(lsc_convex_hull(f, s).values()) == oracle::biconjugate_direct(f.points(), ext(f.values()), s.slopes()));
        CHECK(biconjugate_fixed_point_check(f, s));
    }
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridFunction(qs({0}), th::rv({"0"}).entries()), input_error);
    CHECK_THROWS_AS(GridFunction(qs({0, 0}), th::rv({"0", "1"}).entries()), input_error);
    CHECK_THROWS_AS(GridFunction(qs({0, 1}), th::rv({"0"}).entries()), dimension_mismatch);
    CHECK_THROWS_AS(SlopeSet(qs({})), input_error);
    CHECK_THROWS_AS(SlopeSet(qs({1, 0})), input_error);
}
