#include "helpers.hpp"

#include "residua/error.hpp"
#include "residua/io.hpp"
#include "residua/sampling.hpp"

#include <doctest.h>

using namespace residua;

TEST_CASE("vectors round trip through JSON") {
    Sampler s(37);
    for (SemiringId sr : {th::rm, th::nm, th::bl, SemiringId::matrix(2)}) {
        for (int t = 0; t < 50; ++t) {
            const Vector v = s.vector(sr, 1 + s.below(4));
            const json j = json::parse(canonical_dump(to_json(v)));
            CHECK(vector_from_json(sr, j) == v);
        }
    }
    const Matrix a = s.matrix(th::rm, 2, 3);
    CHECK(matrix_from_json(th::rm, json::parse(to_json(a).dump())) == a);
}

TEST_CASE("canonical dump sorts keys") {
    const json j = json::parse(R"({"y": ["1"], "nu": "-1", "a": {"z": 1, "b": 2}})");
    CHECK(canonical_dump(j) == R"({"a":{"b":2,"z":1},"nu":"-1","y":["1"]})");
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(vector_from_json(th::rm, json::parse(R"(["1", 2])")), input_error);
    CHECK_THROWS_AS(vector_from_json(th::rm, json::parse(R"(["oops"])")), input_error);
    CHECK_THROWS_AS(vector_from_json(th::rm, json::parse("[]")), dimension_mismatch);
    CHECK_THROWS_AS(matrix_from_json(th::rm, json::parse(R"([["1"], ["1", "2"]])")), dimension_mismatch);
    CHECK_THROWS_AS(ProblemFile(json::parse("[]")), input_error);
    CHECK_THROWS_AS(ProblemFile::load("/nonexistent/file.json"), io_error);
}

TEST_CASE("problem files") {
    const ProblemFile pf(json::parse(R"({"semiring": "rmax", "phi": "1", "generators": [], "point": ["0", "1"]})"));
    CHECK(pf.phi().value() == th::r("1"));
    const GeneratingFamily w = pf.family("generators");
    CHECK(w.empty());
    CHECK(w.dim() == 2);
    const ProblemFile bad(json::parse(R"({"generators": [["0", "0", "0"]], "point": ["0", "1"]})"));
    CHECK_THROWS_AS(bad.family("generators"), dimension_mismatch);
    const ProblemFile over(json::parse(R"({"semiring": "rmax", "point": ["1"]})"), th::nm);
    CHECK(over.semiring() == th::nm);
    CHECK_THROWS_AS(ProblemFile(json::parse(R"({"semiring": "nope"})")), input_error);
    CHECK_THROWS_AS(ProblemFile(json::parse(R"({"semiring": "boolean", "phi": "e"})")).phi(), input_error);
}
