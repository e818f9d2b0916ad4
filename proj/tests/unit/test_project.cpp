#include "helpers.hpp"
#include "oracles.hpp"

#include "residua/error.hpp"
#include "residua/project.hpp"
#include "residua/sampling.hpp"

#include <doctest.h>

using namespace residua;
using th::r;
using th::rv;

namespace {

GeneratingFamily abc_lifted() { return th::family({rv({"0", "0", "0"}), rv({"1", "3", "0"}), rv({"3", "4", "0"})}); }
GeneratingFamily qv_family() { return th::family({rv({"0", "-1", "0"}), rv({"-1", "0", "0"})}); }

std::vector<oracle::Vec> gens_of(const GeneratingFamily& w) {
    std::vector<oracle::Vec> out;
    for (const Vector& g : w) {
        out.push_back(oracle::from(g));
    }
    return out;
}

} // namespace

TEST_CASE("projection of the lifted example") {
    const ProjectionResult p = project(abc_lifted(), rv({"-1", "0", "0"}));
    CHECK(p.projection == rv({"-1", "0", "-1"}));
    CHECK_FALSE(p.fixed);
    CHECK_FALSE(is_member(abc_lifted(), rv({"-1", "0", "0"})));
}

TEST_CASE("projection agrees with grid brute force") {
    const auto coeffs = oracle::grid(-6, 6, 1);
    const Vector x = rv({"-1", "0", "0"});
    CHECK(oracle::from(project(abc_lifted(), x).projection) == oracle::project_grid(gens_of(abc_lifted()), oracle::from(x), coeffs));
    const Vector y = rv({"-1", "-1", "0"});
    CHECK(project(qv_family(), y).projection == rv({"-1", "-1", "-1"}));
    CHECK(oracle::from(project(qv_family(), y).projection) == oracle::project_grid(gens_of(qv_family()), oracle::from(y), coeffs));
}

TEST_CASE("projection on random integer data matches brute force") {
    Sampler s(11);
    const auto coeffs = oracle::grid(-30, 30, 1);
    for (int t = 0; t < 40; ++t) {
        std::vector<Vector> gens;
        for (int k = 0; k < 2; ++k) {
            std::vector<Scalar> e;
            for (int i = 0; i < 3; ++i) {
                e.push_back(Scalar::rmax(s.between(-5, 5)));
            }
            gens.emplace_back(th::rm, e);
        }
        std::vector<Scalar> xe;
        for (int i = 0; i < 3; ++i) {
            xe.push_back(Scalar::rmax(s.between(-5, 5)));
        }
        const GeneratingFamily w(gens);
        const Vector x(th::rm, xe);
        CHECK(oracle::from(project(w, x).projection) == oracle::project_grid(gens_of(w), oracle::from(x), coeffs));
        CHECK(oracle::from(qv_inf(w, x).value) == oracle::dominating_grid(gens_of(w), oracle::from(x), coeffs));
    }
}

TEST_CASE("projection trivial cases") {
    const GeneratingFamily w = abc_lifted();
    const ProjectionResult p = project(w, w[1]);
    CHECK(p.projection == w[1]);
    CHECK(p.fixed);
    CHECK(project(GeneratingFamily(th::rm, 2), rv({"3", "4"})).projection == rv({"-inf", "-inf"}));
    CHECK(is_member(w, act(w[2], r("5"))));
    CHECK(is_member(w, Vector::bottom(th::rm, 3)));
    CHECK_THROWS_AS(project(w, rv({"0", "0"})), dimension_mismatch);
}

TEST_CASE("dual projection") {
    const GeneratingFamily w = th::family({rv({"0", "0"})});
    CHECK(project_dual(w, rv({"-1", "-2"})) == rv({"-1", "-1"}));
    CHECK(project_dual(w, rv({"4", "4"})) == rv({"4", "4"}));
    CHECK(project_dual(GeneratingFamily(th::rm, 2), rv({"1", "2"})) == rv({"+inf", "+inf"}));
}

TEST_CASE("least dominating element") {
    const DominatingMeet q = qv_inf(qv_family(), rv({"-1", "-1", "0"}));
    CHECK(q.value == rv({"-1", "-1", "0"}));
    CHECK_FALSE(q.member);
    const auto coeffs = oracle::grid(-4, 4, 1);
    CHECK(oracle::from(q.value) == oracle::dominating_grid(gens_of(qv_family()), oracle::from(rv({"-1", "-1", "0"})), coeffs));

    const DominatingMeet q2 = qv_inf(th::family({rv({"0", "0"})}), rv({"1", "0"}));
    CHECK(q2.value == rv({"1", "1"}));
    CHECK(q2.member);

    const Vector v = act(abc_lifted()[1], r("2"));
    const DominatingMeet q3 = qv_inf(abc_lifted(), v);
    CHECK(q3.value == v);
    CHECK(q3.member);
    CHECK_THROWS_AS(qv_inf(th::family({rv({"0", "+inf"})}), rv({"0", "0"})), input_error);
}
